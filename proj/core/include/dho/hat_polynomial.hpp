#pragma once

#include <string>
#include <vector>

#include "dho/rational.hpp"

namespace dho {

inline long hat(long n) { return 2 * n + 1; }

// Polynomial in the variable nhat = 2n+1; coeffs[i] multiplies nhat^i.
class HatPolynomial {
 public:
  HatPolynomial() = default;
  explicit HatPolynomial(std::vector<Rational> coeffs);

  // Build from coefficients listed from the top power downward in steps
  // of two, e.g. {5, 34, 9} at top power 4 means 5 N^4 + 34 N^2 + 9.
  static HatPolynomial from_descending(long top_power,
                                       const std::vector<Rational>& coeffs);

  Rational operator()(const Rational& nhat) const;
  Rational at_state(long n) const { return (*this)(Rational(hat(n))); }

  const std::vector<Rational>& coefficients() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // True when every nonzero coefficient sits on a power of the given parity.
  bool has_parity(int parity) const;

  HatPolynomial& operator+=(const HatPolynomial& o);
  HatPolynomial& operator*=(const Rational& s);
  friend HatPolynomial operator+(HatPolynomial a, const HatPolynomial& b) { return a += b; }
  friend HatPolynomial operator*(HatPolynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const HatPolynomial& a, const HatPolynomial& b) { return a.c_ == b.c_; }

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace dho
