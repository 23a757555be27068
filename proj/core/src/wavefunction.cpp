#include "dho/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dho/errors.hpp"
#include "dho/exact_core.hpp"

namespace dho {

namespace {

void check_omega(double omega) {
  if (!(omega > 0) || !std::isfinite(omega)) throw InvalidInput("omega must be positive and finite");
}

double horner(const std::vector<double>& c, double z) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

ExponentPolynomial::ExponentPolynomial(long n, long m, std::map<std::pair<long, long>, Rational> terms)
    : n_(n), m_(m), terms_(std::move(terms)) {}

Rational ExponentPolynomial::xi_coefficient(long k, const Rational& omega) const {
  Rational acc(0);
  for (const auto& [kl, v] : terms_)
    if (kl.first == k) acc += v * pow(omega, static_cast<unsigned long>(kl.second - 1));
  return acc;
}

std::vector<double> ExponentPolynomial::folded(double omega) const {
  const Rational w = from_double(omega);
  std::vector<double> c(static_cast<size_t>(m_ + 1), 0.0);
  for (long k = 1; k <= m_; ++k) c[static_cast<size_t>(k)] = to_double(xi_coefficient(k, w));
  return c;
}

double ExponentPolynomial::operator()(double xi, double omega) const {
  return horner(folded(omega), xi * xi);
}

GeneralizedHermitePolynomial::GeneralizedHermitePolynomial(long n, long m,
                                                           std::vector<std::vector<Rational>> c)
    : n_(n), m_(m), c_(std::move(c)) {}

Rational GeneralizedHermitePolynomial::coefficient(long k, const Rational& omega) const {
  Rational acc(0), wp(1);
  for (const auto& v : c_.at(static_cast<size_t>(k))) {
    acc += v * wp;
    wp *= omega;
  }
  return acc;
}

std::vector<double> GeneralizedHermitePolynomial::folded(double omega) const {
  const Rational w = from_double(omega);
  std::vector<double> out;
  for (size_t k = 0; k < c_.size(); ++k) out.push_back(to_double(coefficient(static_cast<long>(k), w)));
  return out;
}

double GeneralizedHermitePolynomial::operator()(double xi, double omega) const {
  const double lead = (n_ % 2) ? xi : 1.0;
  return lead * horner(folded(omega), xi * xi);
}

ExponentPolynomial exponent_polynomial(long n, long m) {
  if (n < 0 || m < 1) throw InvalidInput("exponent polynomial needs n >= 0 and m >= 1");
  std::map<std::pair<long, long>, Rational> t;
  for (long l = 1; l <= m; ++l)
    for (long k = 1; k <= l; ++k) t[{k, l}] = alpha_coefficient(n, k, l);
  return ExponentPolynomial(n, m, std::move(t));
}

GeneralizedHermitePolynomial generalized_hermite(long n, long m) {
  if (n < 0 || m < 1) throw InvalidInput("generalised Hermite polynomial needs n >= 0 and m >= 1");
  const long kp = n / 2;
  if (kp > 0 && m > kMaxBetaOrder)
    throw OutOfTable("beta coefficients stop at order " + std::to_string(kMaxBetaOrder));
  std::vector<std::vector<Rational>> c;
  for (long k = 0; k <= kp; ++k) {
    const Rational h = hermite_coefficient(n, k);
    std::vector<Rational> row;
    // For k = 0 (and for n < 2 altogether) only the omega^0 term survives.
    const long top = (k == 0) ? 1 : m;
    for (long l = 1; l <= top; ++l) row.emplace_back(h * beta_coefficient(n, k, l));
    c.push_back(std::move(row));
  }
  return GeneralizedHermitePolynomial(n, m, std::move(c));
}

double asymptotic_value(const ExponentPolynomial& e, const GeneralizedHermitePolynomial& g,
                        double omega, double x) {
  check_omega(omega);
  const double xi = std::sqrt(omega) * x;
  const double h0 = to_double(hermite_coefficient(g.n(), 0));
  return std::exp(e(xi, omega)) * g(xi, omega) / h0;
}

AsymptoticWavefunction assemble_eigenvector(long n, long m, double omega, double x0, long j0,
                                            Normalization norm) {
  check_omega(omega);
  if (!(x0 >= -0.5 && x0 <= 0.5)) throw InvalidInput("x0 must lie in [-1/2, 1/2]");
  if (j0 < 1) throw InvalidInput("j0 must be positive");
  const ExponentPolynomial e = exponent_polynomial(n, m);
  const GeneralizedHermitePolynomial g = generalized_hermite(n, m);

  // Dividing by h_0 makes psi ~ +xi^p near the origin in both modes.
  const double h0 = to_double(hermite_coefficient(n, 0));
  std::vector<double> ec = e.folded(omega), gc = g.folded(omega);
  for (double& v : gc) v /= h0;
  const double root = std::sqrt(omega);
  const bool odd = n % 2;

  AsymptoticWavefunction w;
  w.n = n;
  w.m = m;
  w.omega = omega;
  w.x0 = x0;
  w.j0 = j0;
  w.normalization = norm;
  w.values.resize(static_cast<size_t>(2 * j0 + 1));
  for (long j = -j0; j <= j0; ++j) {
    const double xi = root * (static_cast<double>(j) - x0);
    const double z = xi * xi;
    const double v = std::exp(horner(ec, z)) * (odd ? xi : 1.0) * horner(gc, z);
    w.values[static_cast<size_t>(j + j0)] = v;
  }

  double peak = 0;
  for (double v : w.values) {
    if (!std::isfinite(v))
      throw TruncationTooSmall("non-finite component; the exponent diverges inside j0=" +
                               std::to_string(j0));
    peak = std::max(peak, std::abs(v));
  }
  const double edge = std::max(std::abs(w.values.front()), std::abs(w.values.back()));
  if (!(peak > 0) || edge > 1e-12 * peak)
    throw TruncationTooSmall("boundary component " + std::to_string(edge / peak) +
                             " of peak at j0=" + std::to_string(j0));

  if (norm == Normalization::UnitEuclidean) {
    double s = 0;
    for (double v : w.values) s += v * v;
    const double inv = 1.0 / std::sqrt(s);
    for (double& v : w.values) v *= inv;
  }
  return w;
}

long default_truncation(long n, long m, double omega, double tail_tolerance) {
  (void)m;
  check_omega(omega);
  const double radius = std::floor(std::sqrt(3.0) / omega);
  const double logs = tail_tolerance > 0 && tail_tolerance < 1 ? -std::log(tail_tolerance) : 0.0;
  const double tail = std::ceil(std::sqrt(2.0 * logs / omega));
  const double spread = std::ceil(4.0 * static_cast<double>(n + 1) / std::sqrt(omega));
  return static_cast<long>(std::max({radius, tail, spread, 1.0}));
}

}  // namespace dho
