#include <set>

#include "dho/derivation.hpp"
#include "dho/errors.hpp"
#include "dho/exact_core.hpp"

namespace dho {

namespace {

Rational binomial(long n, long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

class SlotLookup {
 public:
  SlotLookup(const Bindings& known, const std::vector<Unknown>& unknowns)
      : known_(known), unknowns_(unknowns.begin(), unknowns.end()) {}

  LinearCombination operator()(const Unknown& u) const {
    auto it = known_.find(u);
    if (it != known_.end()) return LinearCombination(it->second);
    if (unknowns_.count(u)) return LinearCombination::of(u);
    return LinearCombination();
  }

 private:
  const Bindings& known_;
  std::set<Unknown> unknowns_;
};

}  // namespace

Bindings seed_bindings(long n) {
  Bindings b;
  b[Unknown::alpha(1, 1)] = Rational(-1, 2);
  for (int k = 1; k <= n / 2; ++k) b[Unknown::beta(k, 1)] = 1;
  b[Unknown::lambda(0)] = -1;
  b[Unknown::lambda(1)] = Rational(hat(n), 2);
  return b;
}

std::vector<Unknown> required_slots(long n, int target_order, Grading grading) {
  const int M = target_order;
  const int kp = static_cast<int>(n / 2), p = static_cast<int>(n % 2);
  std::vector<Unknown> out;
  for (int l = 1; l <= M + 1; ++l)
    for (int k = 1; k <= l; ++k) {
      const bool need = grading == Grading::XiOrder ? l <= M : k + l - 1 <= M;
      if (need) out.push_back(Unknown::alpha(k, l));
    }
  for (int k = 1; k <= kp; ++k)
    for (int l = 1; l <= M + 1; ++l) {
      const bool need = grading == Grading::XiOrder ? l <= M : 2 * (l - 1) + p + 2 * k <= 2 * M;
      if (need) out.push_back(Unknown::beta(k, l));
    }
  for (int m = 0; m <= M; ++m) out.push_back(Unknown::lambda(m));
  return out;
}

FormalSeries expand_difference_residual(long n, int target_order, const Bindings& known,
                                        const std::vector<Unknown>& unknowns,
                                        const ExpansionOptions& opts) {
  if (n < 0 || target_order < 0) throw InvalidInput("expansion needs n >= 0 and order >= 0");
  const int kp = static_cast<int>(n / 2), p = static_cast<int>(n % 2);
  const int W = 2 * target_order;
  const Truncation trunc{opts.grading, W};

  {
    std::set<Unknown> have(unknowns.begin(), unknowns.end());
    for (const auto& kv : known) have.insert(kv.first);
    for (const auto& u : required_slots(n, target_order, opts.grading))
      if (!have.count(u)) throw InvalidInput("insufficient known bindings: missing " + u.name());
  }
  const SlotLookup slot(known, unknowns);

  // Exponent difference E(x+1) - E(x) = sum alpha_kl u^(2(k+l-1)) [(x+1)^2k - x^2k].
  FormalSeries dexp;
  for (int l = 1; 2 * (l - 1) + 1 <= W || (opts.grading == Grading::UPower && 2 * l <= W); ++l) {
    for (int k = 1; k <= l; ++k) {
      const LinearCombination a = slot(Unknown::alpha(k, l));
      if (a.is_zero()) continue;
      const int e = 2 * (k + l - 1);
      for (int j = 1; j <= 2 * k; ++j) {
        const int x = 2 * k - j;
        if (trunc.keeps(x, e)) dexp.add(x, e, a * binomial(2 * k, j));
      }
    }
  }

  // Polynomial part at x and at x+1.
  FormalSeries poly, poly_shift;
  for (int k = 0; k <= kp; ++k) {
    const int d = p + 2 * k;
    const LinearCombination h = opts.symbolic_hermite
                                    ? LinearCombination::of(Unknown::hermite(k))
                                    : LinearCombination(hermite_coefficient(n, k));
    for (int l = 1;; ++l) {
      const int e = 2 * (l - 1) + d;
      const bool beyond = opts.grading == Grading::XiOrder ? 2 * (l - 1) > W : e > W;
      if (beyond) break;
      LinearCombination b;
      if (k == 0)
        b = LinearCombination(Rational(l == 1 ? 1 : 0));
      else
        b = slot(Unknown::beta(k, l));
      if (b.is_zero()) continue;
      const LinearCombination hb = h * b;
      if (trunc.keeps(d, e)) poly.add(d, e, hb);
      for (int j = 0; j <= d; ++j)
        if (trunc.keeps(d - j, e)) poly_shift.add(d - j, e, hb * binomial(d, j));
    }
  }

  // -lambda + u^4 x^2 / 2
  FormalSeries potential;
  for (int m = 0; 2 * m <= W; ++m) potential.add(0, 2 * m, -slot(Unknown::lambda(m)));
  potential.add(2, 4, Rational(1, 2));

  FormalSeries lhs = FormalSeries::product(FormalSeries::exp(dexp, trunc), poly_shift, trunc);
  lhs = lhs.parity_part(p);
  lhs -= FormalSeries::product(potential, poly, trunc);
  return lhs;
}

}  // namespace dho
