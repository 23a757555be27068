#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dho/rational.hpp"

namespace dho {

// sum alpha_{k,l} omega^(l-1) xi^(2k) over the slots l <= m.
class ExponentPolynomial {
 public:
  ExponentPolynomial(long n, long m, std::map<std::pair<long, long>, Rational> terms);

  long n() const { return n_; }
  long order() const { return m_; }
  const std::map<std::pair<long, long>, Rational>& terms() const { return terms_; }

  // Exact coefficient of xi^(2k) at the given omega (omega taken exactly).
  Rational xi_coefficient(long k, const Rational& omega) const;
  // Coefficients of xi^0, xi^2, ..., rounded once each.
  std::vector<double> folded(double omega) const;
  double operator()(double xi, double omega) const;

 private:
  long n_, m_;
  std::map<std::pair<long, long>, Rational> terms_;
};

// sum_k htilde_k(omega) xi^(p+2k), htilde_k = h_k sum_{l<=m} beta_{k,l} omega^(l-1).
class GeneralizedHermitePolynomial {
 public:
  GeneralizedHermitePolynomial(long n, long m, std::vector<std::vector<Rational>> coefficients);

  long n() const { return n_; }
  long order() const { return m_; }
  // coefficients()[k][i] multiplies omega^i in htilde_k.
  const std::vector<std::vector<Rational>>& coefficients() const { return c_; }

  Rational coefficient(long k, const Rational& omega) const;
  std::vector<double> folded(double omega) const;
  double operator()(double xi, double omega) const;

 private:
  long n_, m_;
  std::vector<std::vector<Rational>> c_;
};

enum class Normalization { UnitEuclidean, UnitLowestTerm };

struct AsymptoticWavefunction {
  long n = 0;
  long m = 0;
  double omega = 0;
  double x0 = 0;
  long j0 = 0;
  Normalization normalization = Normalization::UnitEuclidean;
  std::vector<double> values;  // values[i] belongs to j = i - j0

  double at(long j) const { return values.at(static_cast<size_t>(j + j0)); }
  double x(long j) const { return static_cast<double>(j) - x0; }
};

ExponentPolynomial exponent_polynomial(long n, long m);
GeneralizedHermitePolynomial generalized_hermite(long n, long m);

// Continuous-x evaluation of the unnormalised order-m function (divided by h_0).
double asymptotic_value(const ExponentPolynomial& e, const GeneralizedHermitePolynomial& g,
                        double omega, double x);

AsymptoticWavefunction assemble_eigenvector(long n, long m, double omega, double x0, long j0,
                                            Normalization norm = Normalization::UnitEuclidean);

// Half-width of the sampled grid.
long default_truncation(long n, long m, double omega, double tail_tolerance = 1e-18);

}  // namespace dho
