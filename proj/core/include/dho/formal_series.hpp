#pragma once

#include <climits>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dho/rational.hpp"

namespace dho {

// Symbolic unknowns that may appear linearly in a formal series.
struct Unknown {
  enum class Kind { Alpha, Beta, Lambda, Hermite };
  Kind kind;
  int k = 0;
  int l = 0;

  static Unknown alpha(int k, int l) { return {Kind::Alpha, k, l}; }
  static Unknown beta(int k, int l) { return {Kind::Beta, k, l}; }
  static Unknown lambda(int m) { return {Kind::Lambda, 0, m}; }
  static Unknown hermite(int k) { return {Kind::Hermite, k, 0}; }

  std::string name() const;
  auto key() const { return std::make_tuple(static_cast<int>(kind), k, l); }
  friend bool operator<(const Unknown& a, const Unknown& b) { return a.key() < b.key(); }
  friend bool operator==(const Unknown& a, const Unknown& b) { return a.key() == b.key(); }
};

using Bindings = std::map<Unknown, Rational>;

// c + sum_i a_i * u_i with the unknowns kept sorted and no zero weights.
class LinearCombination {
 public:
  LinearCombination() = default;
  LinearCombination(const Rational& c) : c_(c) {}  // NOLINT: implicit on purpose
  static LinearCombination of(const Unknown& u, const Rational& coeff = 1);

  const Rational& constant() const { return c_; }
  const std::vector<std::pair<Unknown, Rational>>& terms() const { return t_; }
  bool has_unknowns() const { return !t_.empty(); }
  bool is_zero() const { return t_.empty() && sgn(c_) == 0; }
  Rational coefficient(const Unknown& u) const;

  LinearCombination& operator+=(const LinearCombination& o);
  LinearCombination& operator-=(const LinearCombination& o);
  LinearCombination& operator*=(const Rational& s);
  LinearCombination operator-() const;
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }

  // Throws InconsistentSystem when both factors carry unknowns.
  friend LinearCombination operator*(const LinearCombination& a, const LinearCombination& b);

  LinearCombination substitute(const Bindings& b) const;
  std::string str() const;

 private:
  Rational c_{0};
  std::vector<std::pair<Unknown, Rational>> t_;
};

// How monomials x^a u^e are graded for truncation. XiOrder uses e - a (the
// power of omega at fixed xi = u x, doubled); UPower uses e.
enum class Grading { XiOrder, UPower };

struct Truncation {
  Grading grading = Grading::XiOrder;
  int max_weight = INT_MAX;
  int weight(int a, int e) const { return grading == Grading::XiOrder ? e - a : e; }
  bool keeps(int a, int e) const { return weight(a, e) <= max_weight; }
};

// Sparse polynomial in (x, u) with linear-combination coefficients.
class FormalSeries {
 public:
  using Key = std::pair<int, int>;  // (power of x, power of u)

  FormalSeries() = default;
  static FormalSeries constant(const LinearCombination& c) {
    FormalSeries s;
    s.add(0, 0, c);
    return s;
  }

  void add(int a, int e, const LinearCombination& c);
  const std::map<Key, LinearCombination>& terms() const { return t_; }
  LinearCombination coefficient(int a, int e) const;
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  FormalSeries& operator+=(const FormalSeries& o);
  FormalSeries& operator-=(const FormalSeries& o);
  FormalSeries& operator*=(const Rational& s);

  static FormalSeries product(const FormalSeries& a, const FormalSeries& b,
                              const Truncation& t = {});
  // exp(f) for f without weight-zero part, truncated to t.max_weight.
  static FormalSeries exp(const FormalSeries& f, const Truncation& t);

  FormalSeries truncated(const Truncation& t) const;
  // Keep only the x-powers of the given parity.
  FormalSeries parity_part(int parity) const;
  FormalSeries substitute(const Bindings& b) const;
  FormalSeries derivative_x() const;
  // Terms of exactly this weight.
  FormalSeries weight_slice(const Truncation& t, int weight) const;
  // Lowest weight carrying a nonzero coefficient, or INT_MAX.
  int lowest_weight(const Truncation& t) const;

  std::string str() const;

 private:
  std::map<Key, LinearCombination> t_;
};

}  // namespace dho
