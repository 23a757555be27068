#include <gtest/gtest.h>

#include <cmath>

#include "dho/errors.hpp"
#include "dho/exact_core.hpp"
#include "dho/reference_solver.hpp"
#include "dho/wavefunction.hpp"

using namespace dho;

TEST(ExponentPolynomial, FirstOrderIsGaussian) {
  for (long n : {0, 3, 7}) {
    const ExponentPolynomial e = exponent_polynomial(n, 1);
    ASSERT_EQ(e.terms().size(), 1u);
    EXPECT_EQ(e.terms().at({1, 1}), Rational(-1, 2));
  }
}

TEST(ExponentPolynomial, SecondOrderEvenStates) {
  const Rational w(1, 50);
  for (long n : {0, 2, 4, 6}) {
    const ExponentPolynomial e = exponent_polynomial(n, 2);
    EXPECT_EQ(e.xi_coefficient(1, w), -(Rational(1, 2) + Rational(3 + 2 * n, 32) * w));
    EXPECT_EQ(e.xi_coefficient(2, w), w / 96);
  }
}

TEST(ExponentPolynomial, ThirdOrderSexticTerm) {
  const Rational w(1, 10);
  EXPECT_EQ(exponent_polynomial(5, 3).xi_coefficient(3, w), -w * w / 1280);
  EXPECT_EQ(exponent_polynomial(3, 9).terms().size(), 45u);
  EXPECT_THROW(exponent_polynomial(3, 10), OutOfTable);
}

TEST(GeneralizedHermite, Examples) {
  const GeneralizedHermitePolynomial g1 = generalized_hermite(4, 1);
  for (long k = 0; k <= 2; ++k) EXPECT_EQ(g1.coefficient(k, Rational(1, 3)), hermite_coefficient(4, k));
  const GeneralizedHermitePolynomial g0 = generalized_hermite(0, 20);
  ASSERT_EQ(g0.coefficients().size(), 1u);
  EXPECT_EQ(g0.coefficient(0, Rational(1, 7)), 1);
  const GeneralizedHermitePolynomial g2 = generalized_hermite(2, 2);
  const Rational w(1, 5);
  EXPECT_EQ(g2.coefficient(0, w), -2);
  EXPECT_EQ(g2.coefficient(1, w), 4 * (1 + w / 4));
  EXPECT_THROW(generalized_hermite(2, 8), OutOfTable);
  EXPECT_NO_THROW(generalized_hermite(1, 12));
}

TEST(GeneralizedHermite, ReducesToHermiteAtZeroOmega) {
  for (long n = 0; n <= 9; ++n) {
    const GeneralizedHermitePolynomial g = generalized_hermite(n, 5);
    for (long k = 0; k <= n / 2; ++k) EXPECT_EQ(g.coefficient(k, Rational(0)), hermite_coefficient(n, k));
  }
}

TEST(DefaultTruncation, Examples) {
  EXPECT_EQ(default_truncation(0, 2, 0.01, 1e-18), 173);
  EXPECT_EQ(default_truncation(0, 4, 0.0001), 17320);
  EXPECT_GE(default_truncation(3, 1, 0.5, 1.0), static_cast<long>(std::ceil(16 / std::sqrt(0.5))));
}

TEST(Assemble, GroundStateIsSampledGaussian) {
  const double w = 0.05;
  const long j0 = default_truncation(0, 1, w);
  const AsymptoticWavefunction psi = assemble_eigenvector(0, 1, w, 0, j0);
  double norm = 0;
  for (long j = -j0; j <= j0; ++j) norm += std::exp(-w * j * j);
  norm = std::sqrt(norm);
  for (long j = -j0; j <= j0; ++j) ASSERT_NEAR(psi.at(j), std::exp(-0.5 * w * j * j) / norm, 1e-16);
}

TEST(Assemble, UnitNormAndExactParity) {
  for (long n = 0; n <= 6; ++n)
    for (long m : {1, 2, 3, 5}) {
      const double w = 0.02;
      const AsymptoticWavefunction psi = assemble_eigenvector(n, m, w, 0, default_truncation(n, m, w));
      double s = 0;
      for (double v : psi.values) s += v * v;
      EXPECT_NEAR(s, 1.0, 1e-14);
      const double sign = n % 2 ? -1.0 : 1.0;
      for (long j = 1; j <= psi.j0; ++j) ASSERT_EQ(psi.at(-j), sign * psi.at(j)) << n << " " << m << " " << j;
      EXPECT_LT(std::abs(psi.values.front()), 1e-15 * 1.0);
    }
}

TEST(Assemble, SecondStateNodes) {
  const double w = 0.01;
  const AsymptoticWavefunction psi = assemble_eigenvector(2, 1, w, 0, 200);
  const double node = 1 / std::sqrt(2 * w);  // 7.07
  const long j = static_cast<long>(std::floor(node));
  EXPECT_LT(psi.at(j) * psi.at(j + 1), 0);
  EXPECT_LT(psi.at(-j) * psi.at(-j - 1), 0);
  // Divided by h_0 = -2, so positive between the nodes.
  for (long i = -j + 1; i < j; ++i) EXPECT_GT(psi.at(i), 0);
}

TEST(Assemble, LowestTermNormalisation) {
  const double w = 0.03;
  for (long n = 0; n <= 5; ++n) {
    const AsymptoticWavefunction psi =
        assemble_eigenvector(n, 3, w, 0, default_truncation(n, 3, w), Normalization::UnitLowestTerm);
    const double xi = std::sqrt(w);
    const double expect = n % 2 ? xi : 1.0;
    EXPECT_NEAR(n % 2 ? psi.at(1) : psi.at(0), expect, 0.05 * (n + 1) * expect) << n;
  }
}

TEST(Assemble, ContinuumLimitIsHermiteFunction) {
  const double w = 0.04;
  for (long n = 0; n <= 10; ++n) {
    const long j0 = default_truncation(n, 1, w);
    const AsymptoticWavefunction psi = assemble_eigenvector(n, 1, w, 0, j0);
    std::vector<double> ref;
    double s = 0;
    const double h0 = to_double(hermite_coefficient(n, 0));
    for (long j = -j0; j <= j0; ++j) {
      const double xi = std::sqrt(w) * j;
      double h = 0;
      for (long k = n / 2; k >= 0; --k) h = h * xi * xi + to_double(hermite_coefficient(n, k));
      if (n % 2) h *= xi;
      ref.push_back(h / h0 * std::exp(-xi * xi / 2));
      s += ref.back() * ref.back();
    }
    double d = 0;
    for (size_t i = 0; i < ref.size(); ++i) d += std::pow(psi.values[i] - ref[i] / std::sqrt(s), 2);
    EXPECT_LT(std::sqrt(d), 1e-13) << n;
  }
}

TEST(Assemble, TruncationTooSmall) {
  EXPECT_THROW(assemble_eigenvector(0, 1, 0.01, 0, 5), TruncationTooSmall);
  EXPECT_THROW(assemble_eigenvector(0, 1, 0.01, 0.7, 50), InvalidInput);
}

TEST(Assemble, DoublingTruncationChangesNothing) {
  const double w = 0.02;
  for (long m : {1, 2, 3, 4}) {
    const long j0 = default_truncation(3, m, w);
    const auto a = assemble_eigenvector(3, m, w, 0.25, j0);
    const auto b = assemble_eigenvector(3, m, w, 0.25, j0 * 3 / 2);
    double d = 0;
    for (long j = -b.j0; j <= b.j0; ++j) {
      const double av = std::abs(j) <= j0 ? a.at(j) : 0.0;
      d += (av - b.at(j)) * (av - b.at(j));
    }
    EXPECT_LT(std::sqrt(d), 1e-13) << m;
  }
}

TEST(Assemble, GroundStateSecondOrderError) {
  const double w = 0.01;
  const long j0 = select_dimension(w, 0, DimensionRule::Tail);
  const auto psi = assemble_eigenvector(0, 2, w, 0, j0);
  const EigenPair ref = reference_state(0, w, 0, j0);
  double d = 0;
  for (size_t i = 0; i < ref.vector.size(); ++i) d += std::pow(psi.values[i] - ref.vector[i], 2);
  d = std::sqrt(d);
  // Order of magnitude of 0.002 * omega^2 = 2e-7.
  EXPECT_GT(d, 2e-8);
  EXPECT_LT(d, 2e-6);
}

// Relative defect of the difference equation at one grid point.
static double pointwise_residual(long n, long m, double w, long j) {
  const auto e = exponent_polynomial(n, m);
  const auto g = generalized_hermite(n, m);
  const double lam = eigenvalue_series_value(n, m, w);
  const double x = static_cast<double>(j);
  const double c = asymptotic_value(e, g, w, x);
  const double lr = asymptotic_value(e, g, w, x - 1) + asymptotic_value(e, g, w, x + 1);
  return std::abs(lr / (2 * c * (-lam + w * w * x * x / 2)) - 1);
}

TEST(Assemble, PointwiseResidualScaling) {
  for (long n = 0; n <= 4; ++n)
    for (long m = 1; m <= 3; ++m) {
      // A point at moderate xi away from the nodes of H_n.
      const long j = n % 2 ? 1 : 0;
      const double r1 = pointwise_residual(n, m, 0.02, j);
      const double r2 = pointwise_residual(n, m, 0.01, j);
      const double r3 = pointwise_residual(n, m, 0.005, j);
      for (double slope : {std::log2(r1 / r2), std::log2(r2 / r3)}) {
        EXPECT_GE(slope, m + 0.7) << n << " " << m;
        EXPECT_LE(slope, m + 1.3) << n << " " << m;
      }
    }
}
