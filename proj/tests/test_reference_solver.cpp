#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "dho/errors.hpp"
#include "dho/exact_core.hpp"
#include "dho/reference_solver.hpp"
#include "dho/wavefunction.hpp"

using namespace dho;

static Eigen::MatrixXd dense(const TridiagonalOperator& op) {
  const auto n = static_cast<Eigen::Index>(op.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = op.diag[static_cast<size_t>(i)];
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = op.offdiag[static_cast<size_t>(i)];
  }
  return m;
}

TEST(BuildTridiagonal, Examples) {
  const auto a = build_tridiagonal(1, 0, 1, ParityMode::None);
  EXPECT_EQ(a.diag, (std::vector<double>{0.5, 0, 0.5}));
  EXPECT_EQ(a.offdiag, (std::vector<double>{-0.5, -0.5}));
  EXPECT_EQ(a.j_offset, -1);

  const auto b = build_tridiagonal(1, 0, 2, ParityMode::Even);
  EXPECT_EQ(b.diag, (std::vector<double>{0, 0.5, 2}));
  EXPECT_DOUBLE_EQ(b.offdiag[0], -1 / std::sqrt(2.0));
  EXPECT_EQ(b.offdiag[1], -0.5);

  const auto c = build_tridiagonal(0.5, 0.5, 1, ParityMode::None);
  EXPECT_EQ(c.diag, (std::vector<double>{0.28125, 0.03125, 0.03125}));

  const auto d = build_tridiagonal(1, 0, 3, ParityMode::Odd);
  EXPECT_EQ(d.j_offset, 1);
  EXPECT_EQ(d.size(), 3u);
  EXPECT_THROW(build_tridiagonal(1, 0.25, 3, ParityMode::Even), InvalidInput);
}

TEST(BuildTridiagonal, GershgorinRadiusBound) {
  for (auto mode : {ParityMode::None, ParityMode::Even, ParityMode::Odd}) {
    const auto op = build_tridiagonal(0.3, 0, 20, mode);
    for (size_t i = 0; i < op.size(); ++i) {
      double r = 0;
      if (i > 0) r += std::abs(op.offdiag[i - 1]);
      if (i + 1 < op.size()) r += std::abs(op.offdiag[i]);
      // Only the even-sector boundary row exceeds 1, by the sqrt(2)/2 entry.
      EXPECT_LE(r, (mode == ParityMode::Even && i <= 1 ? 0.5 + std::sqrt(0.5) : 1.0) + 1e-15);
    }
  }
}

TEST(SelectDimension, Examples) {
  EXPECT_EQ(select_dimension(0.5, 0, DimensionRule::Strict), 5);
  EXPECT_EQ(select_dimension(1.0, 0, DimensionRule::Strict), 2);
  EXPECT_GE(select_dimension(0.01, 0, DimensionRule::Tail), 217);
}

TEST(Eigenpairs, TrivialCases) {
  TridiagonalOperator one;
  one.diag = {0.7};
  const auto p = eigenpairs(one, 1);
  EXPECT_NEAR(p[0].value, 0.7, 1e-15);
  EXPECT_EQ(p[0].vector, std::vector<double>{1.0});

  const auto chain = build_tridiagonal(0, 0, 1, ParityMode::None);
  const auto q = eigenpairs(chain, 3);
  EXPECT_NEAR(q[0].value, -std::sqrt(2.0) / 2, 1e-15);
  EXPECT_NEAR(q[1].value, 0, 1e-15);
  EXPECT_NEAR(q[2].value, std::sqrt(2.0) / 2, 1e-15);
  EXPECT_THROW(eigenpairs(chain, 4), InvalidInput);
}

TEST(Eigenpairs, AgreesWithDenseSolver) {
  for (double x0 : {0.0, 0.2, 0.5})
    for (double w : {0.1, 0.4, 1.3}) {
      const auto op = build_tridiagonal(w, x0, select_dimension(w, 6, DimensionRule::Tail), ParityMode::None);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(op));
      const auto pairs = eigenpairs(op, 6);
      for (size_t i = 0; i < pairs.size(); ++i) {
        EXPECT_NEAR(pairs[i].value, es.eigenvalues()(static_cast<Eigen::Index>(i)), 1e-13);
        EXPECT_LE(pairs[i].residual, 1e-12 * std::max(1.0, std::abs(pairs[i].value)));
        double nn = 0, ov = 0;
        for (size_t k = 0; k < op.size(); ++k) {
          nn += pairs[i].vector[k] * pairs[i].vector[k];
          ov += pairs[i].vector[k] * es.eigenvectors()(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i));
        }
        EXPECT_NEAR(nn, 1.0, 1e-14);
        EXPECT_NEAR(std::abs(ov), 1.0, 1e-10);
      }
    }
}

TEST(Eigenpairs, SturmGershgorinOrthogonality) {
  const auto op = build_tridiagonal(0.05, 0.3, select_dimension(0.05, 8, DimensionRule::Tail), ParityMode::None);
  const auto pairs = eigenpairs(op, 8);
  const auto [lo, hi] = op.gershgorin();
  for (size_t i = 0; i < pairs.size(); ++i) {
    const double d = 1e-9;
    EXPECT_EQ(op.sturm_count(pairs[i].value - d), i);
    EXPECT_EQ(op.sturm_count(pairs[i].value + d), i + 1);
    EXPECT_GE(pairs[i].value, lo);
    EXPECT_LE(pairs[i].value, hi);
    for (size_t j = 0; j < i; ++j) {
      double s = 0;
      for (size_t k = 0; k < op.size(); ++k) s += pairs[i].vector[k] * pairs[j].vector[k];
      EXPECT_LE(std::abs(s), 1e-10);
    }
  }
}

TEST(Eigenpairs, ParitySectorsMatchFullChain) {
  const double w = 0.2;
  const long j0 = select_dimension(w, 5, DimensionRule::Tail);
  const auto full = eigenpairs(build_tridiagonal(w, 0, j0, ParityMode::None), 6);
  const auto even = eigenpairs(build_tridiagonal(w, 0, j0, ParityMode::Even), 3);
  const auto odd = eigenpairs(build_tridiagonal(w, 0, j0, ParityMode::Odd), 3);
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(full[2 * i].value, even[i].value, 1e-13);
    EXPECT_NEAR(full[2 * i + 1].value, odd[i].value, 1e-13);
  }
  for (long n = 0; n < 6; ++n) {
    const EigenPair p = reference_state(n, w, 0, j0);
    double ov = 0;
    for (size_t k = 0; k < p.vector.size(); ++k) ov += p.vector[k] * full[static_cast<size_t>(n)].vector[k];
    EXPECT_NEAR(std::abs(ov), 1.0, 1e-10) << n;
  }
}

TEST(Eigenpairs, DimensionSufficiency) {
  const double w = 0.1;
  const long j0 = select_dimension(w, 4, DimensionRule::Tail);
  const auto a = eigenpairs(build_tridiagonal(w, 0, j0, ParityMode::None), 5);
  const auto b = eigenpairs(build_tridiagonal(w, 0, 2 * j0, ParityMode::None), 5);
  for (size_t i = 0; i < 5; ++i) EXPECT_LT(std::abs(a[i].value - b[i].value), 1e-13);
}

TEST(Eigenpairs, SeriesCrossCheck) {
  EXPECT_NEAR(reference_state(0, 0.1, 0).value, eigenvalue_series_value(0, 16, 0.1), 1e-11);
}

TEST(Eigenpairs, SeededInverseIteration) {
  const double w = 0.02;
  const long j0 = select_dimension(w, 3, DimensionRule::Tail);
  const auto psi = assemble_eigenvector(3, 3, w, 0, default_truncation(3, 3, w));
  std::vector<double> seed(static_cast<size_t>(2 * j0 + 1), 0.0);
  for (long j = -psi.j0; j <= psi.j0; ++j) seed[static_cast<size_t>(j + j0)] = psi.at(j);
  const EigenPair a = reference_state(3, w, 0, j0, &seed);
  const EigenPair b = reference_state(3, w, 0, j0);
  EXPECT_EQ(a.value, b.value);
  double d = 0;
  for (size_t k = 0; k < a.vector.size(); ++k) d = std::max(d, std::abs(a.vector[k] - b.vector[k]));
  EXPECT_LT(d, 1e-12);
}

TEST(Splitting, DecaysWithInverseOmega) {
  double D[3];
  const double ws[3] = {0.6, 0.8, 1.0};
  for (int i = 0; i < 3; ++i)
    D[i] = std::abs(reference_state(0, ws[i], 0.5).value - reference_state(0, ws[i], 0.0).value);
  for (double d : D) EXPECT_GT(d, 0);
  EXPECT_LT(D[0] / D[1], D[1] / D[2]);
}

TEST(Mathieu, ParameterMap) {
  EXPECT_EQ(mathieu_omega(4), 1.0);
  EXPECT_EQ(mathieu_state(0, MathieuFamily::A), std::make_pair(0L, 0.0));
  EXPECT_EQ(mathieu_state(1, MathieuFamily::B), std::make_pair(0L, 0.5));
  EXPECT_EQ(mathieu_state(1, MathieuFamily::A), std::make_pair(1L, 0.5));
  EXPECT_EQ(mathieu_state(2, MathieuFamily::B), std::make_pair(1L, 0.0));
  EXPECT_THROW(mathieu_state(0, MathieuFamily::B), InvalidInput);
  EXPECT_THROW(mathieu_omega(0), InvalidInput);
  // q = 4/omega^2 and a = 2 q lambda in exact arithmetic.
  const Rational w(1, 5), lambda(-9, 10);
  const Rational q = Rational(4) / (w * w);
  EXPECT_EQ(q, 100);
  EXPECT_EQ(2 * q * lambda, Rational(8) * lambda / (w * w));
}

TEST(Mathieu, MatrixAgreesWithSeries) {
  MathieuQuery q;
  q.order = 0;
  q.q = 100;
  const double a = mathieu_characteristic(q, MathieuMethod::Asymptotic).value;
  const double b = mathieu_characteristic(q, MathieuMethod::Matrix).value;
  EXPECT_NEAR(a, b, 1e-8);
  for (double Q : {100.0, 400.0, 1600.0}) {
    q.q = Q;
    const double v = mathieu_characteristic(q, MathieuMethod::Matrix).value;
    EXPECT_LT(std::abs(v + 2 * Q - 2 * std::sqrt(Q)), 1.0);
  }
}

TEST(Mathieu, FamiliesInterlace) {
  // a_0 < b_1 < a_1 < b_2 < a_2 at moderate q.
  MathieuQuery q;
  q.q = 25;
  auto val = [&](long r, MathieuFamily f) {
    q.order = r;
    q.family = f;
    return mathieu_characteristic(q, MathieuMethod::Matrix).value;
  };
  const double a0 = val(0, MathieuFamily::A), b1 = val(1, MathieuFamily::B), a1 = val(1, MathieuFamily::A),
               b2 = val(2, MathieuFamily::B), a2 = val(2, MathieuFamily::A);
  EXPECT_LT(a0, b1);
  EXPECT_LT(b1, a1);
  EXPECT_LT(a1, b2);
  EXPECT_LT(b2, a2);
}
