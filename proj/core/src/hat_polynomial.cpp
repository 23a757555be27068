#include "dho/hat_polynomial.hpp"

#include <sstream>

namespace dho {

HatPolynomial::HatPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

HatPolynomial HatPolynomial::from_descending(long top_power,
                                             const std::vector<Rational>& coeffs) {
  std::vector<Rational> c(static_cast<size_t>(top_power + 1));
  long p = top_power;
  for (const auto& q : coeffs) {
    c.at(static_cast<size_t>(p)) = q;
    p -= 2;
  }
  return HatPolynomial(std::move(c));
}

void HatPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational HatPolynomial::operator()(const Rational& nhat) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * nhat + *it;
  return acc;
}

bool HatPolynomial::has_parity(int parity) const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0 && static_cast<int>(i % 2) != (parity & 1)) return false;
  return true;
}

HatPolynomial& HatPolynomial::operator+=(const HatPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

HatPolynomial& HatPolynomial::operator*=(const Rational& s) {
  for (auto& q : c_) q *= s;
  trim();
  return *this;
}

std::string HatPolynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].get_str() << ")";
    if (i > 0) os << "*N^" << i;
  }
  return os.str();
}

}  // namespace dho
