#include <climits>

#include "dho/derivation.hpp"
#include "dho/errors.hpp"
#include "dho/exact_core.hpp"

namespace dho {

namespace {

long checked_extra(long extra) {
  if (extra < 1) throw InvalidInput("residual search needs at least one order past m");
  return extra;
}

// Difference equation, xi-graded: slots above the solved order are zero.
long difference_order(const AnsatzCoefficients& a, long extra) {
  const int top = static_cast<int>(a.order + extra);
  Bindings known = a.to_bindings();
  for (const auto& u : required_slots(a.n, top, Grading::XiOrder)) known.emplace(u, Rational(0));
  const FormalSeries r = expand_difference_residual(a.n, top, known, {});
  const int w = r.lowest_weight(Truncation{Grading::XiOrder, 2 * top});
  if (w == INT_MAX) return top;
  return (w - 1) / 2;
}

// Differential equation with the shift operator cut after omega^m:
//   -sum_{j<=m} omega^j/(2j)! Q_2j + omega xi^2/2 P - lambda P,
// Q_0 = P, Q_{i+1} = Q_i' + F' Q_i, with x standing for xi and u^2 for omega.
long ode_order(const AnsatzCoefficients& a, long extra) {
  const int m = static_cast<int>(a.order);
  const int top = m + static_cast<int>(extra);
  const Truncation trunc{Grading::UPower, 2 * top};
  const int p = a.parity();

  FormalSeries exponent, poly;
  for (const auto& [kl, v] : a.alpha)
    exponent.add(static_cast<int>(2 * kl.first), static_cast<int>(2 * (kl.second - 1)), v);
  for (long k = 0; k <= a.kprime(); ++k) {
    const Rational h = hermite_coefficient(a.n, k);
    for (long l = 1; l <= a.order; ++l) {
      const Rational& b = a.beta.at({k, l});
      if (sgn(b) != 0) poly.add(static_cast<int>(p + 2 * k), static_cast<int>(2 * (l - 1)), Rational(h * b));
    }
  }
  const FormalSeries slope = exponent.derivative_x();

  FormalSeries residual, q = poly;
  Rational fact(1);  // (2j)!
  for (int i = 0; i <= 2 * m; ++i) {
    if (i % 2 == 0) {
      const int j = i / 2;
      if (j > 0) fact *= Rational((2 * j - 1) * (2 * j));
      FormalSeries term;
      for (const auto& [key, c] : q.terms())
        if (trunc.keeps(key.first, key.second + 2 * j)) term.add(key.first, key.second + 2 * j, c);
      term *= Rational(-1 / fact);
      residual += term;
    }
    if (i < 2 * m) {
      FormalSeries next = q.derivative_x();
      next += FormalSeries::product(slope, q, trunc);
      q = std::move(next);
    }
  }
  FormalSeries potential;
  potential.add(2, 2, Rational(1, 2));
  for (size_t k = 0; k < a.lambda.size(); ++k) potential.add(0, static_cast<int>(2 * k), Rational(-a.lambda[k]));
  residual += FormalSeries::product(potential, poly, trunc);

  const int e = residual.lowest_weight(trunc);
  if (e == INT_MAX) return top;
  return (e - 1) / 2;
}

}  // namespace

long residual_order(const AnsatzCoefficients& a, ResidualEquation eq, long extra) {
  checked_extra(extra);
  return eq == ResidualEquation::Difference ? difference_order(a, extra) : ode_order(a, extra);
}

long residual_order(long n, long m, ResidualEquation eq, long extra) {
  if (n < 0 || m < 1) throw InvalidInput("residual_order needs n >= 0 and m >= 1");
  AnsatzCoefficients a;
  try {
    a = AnsatzCoefficients::from_tables(n, m);
  } catch (const OutOfTable&) {
    // Beyond the tables the solution is derived afresh.
    const DerivationResult d = derive(n, static_cast<int>(m));
    a = AnsatzCoefficients::from_bindings(n, m, d.values);
  }
  return residual_order(a, eq, extra);
}

}  // namespace dho
