#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dho/hat_polynomial.hpp"
#include "dho/rational.hpp"

namespace dho {

// Gamma(k+1/2) / (sqrt(pi) Gamma(k+l)) = (2k-1)!! / (2^k (k+l-1)!).
Rational gamma_half_ratio(long k, long l);

// Coefficient of xi^(n+2(k-k')) in the physicists' Hermite polynomial H_n.
Rational hermite_coefficient(long n, long k);
std::vector<Rational> hermite_coefficients(long n);

// Eigenvalue series: lambda_n = sum_m lambda^(m) omega^m.
constexpr long kGeneralEigenvalueOrder = 16;
constexpr long kGroundStateEigenvalueOrder = 31;

long max_eigenvalue_order(long n);
Rational eigenvalue_coefficient(long n, long m);
// Partial sum through m_max. Exact up to the final rounding.
double eigenvalue_series_value(long n, long m_max, double omega);

// Exponent coefficients alpha_{k,l}, multiplying omega^(l-1) xi^(2k).
bool alpha_available(long n, long k, long l);
Rational alpha_coefficient(long n, long k, long l);
// Closed-form family l-k = delta as a polynomial in nhat at fixed k.
HatPolynomial alpha_family(long k, long delta);

// Polynomial-part coefficients beta_{k,l}; beta_{k,1} = 1.
constexpr long kMaxBetaOrder = 7;
Rational beta_coefficient(long n, long k, long l);

enum class BetaBlock { Leading, LeadingDifference };

// Leading blocks of the beta tables: Leading covers second_index 2l-2 and
// 2l-3; LeadingDifference covers 2l-3 and 2l-4.
Rational leading_beta_block(BetaBlock which, long l, long second_index, long k, long kp);

// Exponent slots (k,l) with 1 <= k <= l <= order.
long exponent_slot_count(long order);

class CoefficientTables {
 public:
  static const CoefficientTables& instance();

  // Index m = 0..16.
  const std::vector<HatPolynomial>& eigenvalue_terms() const { return eigen_; }
  // Ground-state lambda^(m) for m = 17..31; index 0 is m = 17.
  const std::vector<Rational>& ground_state_extension() const { return ground_; }
  const std::map<std::pair<long, long>, HatPolynomial>& alpha_extras() const { return alpha_extra_; }
  const Rational& ground_state_alpha_datum() const { return ground_alpha_; }
  // Slot of the stored high-order ground-state exponent coefficient
  // (the omega^30 xi^2 term).
  long ground_state_alpha_slot() const { return 31; }
  // Power-of-two exponent p_m in lambda^(m) = -d_m / 2^p_m.
  long eigenvalue_denominator_exponent(long m) const;

  // Whole table as JSON text; rationals as "num/den" strings.
  std::string to_json(long max_n = 6) const;

 private:
  CoefficientTables();
  std::vector<HatPolynomial> eigen_;
  std::vector<Rational> ground_;
  std::map<std::pair<long, long>, HatPolynomial> alpha_extra_;
  Rational ground_alpha_;
};

}  // namespace dho
