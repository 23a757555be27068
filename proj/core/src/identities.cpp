#include <functional>

#include "dho/derivation.hpp"
#include "dho/errors.hpp"
#include "dho/exact_core.hpp"

namespace dho {

namespace {

// h_k of H_n with out-of-range indices read as zero.
Rational h_or_zero(long n, long k) {
  if (k < 0 || k > n / 2) return Rational(0);
  return hermite_coefficient(n, k);
}

using Row = std::vector<std::pair<long, Rational>>;  // (offset from k, weight)

Row closed_form_row(int order, long n, long k) {
  const Rational N(n), K(k);
  const long kp = n / 2;
  switch (order) {
    case 1: {
      // Even n takes the minus sign: n=2, k=0 gives -4 + 4 = 0.
      const Rational s = (n % 2 == 0) ? Rational(-1) : Rational(1);
      return {{0, 2 * Rational(kp - k)}, {1, 2 * (K + 1) * (K + 1) + s * (K + 1)}};
    }
    case 2:
      return {
          {-1, 6 * (N + 2 - 2 * K)},
          {0, 2 * K * K * K + K * K * (42 - 11 * N) - 6 * N - 3 * N * N - K * (-6 + 9 * N - 5 * N * N)},
          {1, -(1 + K) * (1 + 2 * K) * (22 + 31 * K + K * K - 5 * N - 5 * K * N)},
          {2, 2 * (2 * K + 4) * (2 * K + 3) * (2 * K + 2) * (2 * K + 1)},
      };
    case 3: {
      const Rational K2 = K * K, K3 = K2 * K, K4 = K3 * K, K5 = K4 * K, N2 = N * N, N3 = N2 * N;
      return {
          {-2, 180 * (-4 + 2 * K - N)},
          {-1, 30 * (62 - 42 * K - 24 * K2 + 4 * K3 + 74 * N - 10 * K * N - 22 * K2 * N + 17 * N2 +
                     10 * K * N2)},
          {0, -450 * N - 450 * N2 - 90 * N3 - 10 * K5 + K4 * (-452 + 105 * N) +
                  K3 * (-2332 + 2458 * N - 300 * N2) + K2 * (4230 + 4912 * N - 1204 * N2 + 125 * N3) +
                  K * (-300 - 585 * N - 1258 * N2 + 179 * N3)},
          {1, (1 + K) * (1 + 2 * K) *
                  (1022 + 2705 * K + 3684 * K2 + 326 * K3 + 5 * K4 - 2274 * N - 4430 * K * N -
                   1726 * K2 * N - 50 * K3 * N + 454 * N2 + 579 * K * N2 + 125 * K2 * N2)},
          {2, -16 * (1 + K) * (2 + K) * (1 + 2 * K) * (3 + 2 * K) * (110 + 101 * K + 5 * K2 - 50 * N - 25 * K * N)},
          {3, 256 * (1 + K) * (2 + K) * (3 + K) * (1 + 2 * K) * (3 + 2 * K) * (5 + 2 * K)},
      };
    }
    default:
      throw InvalidInput("recursion identities exist for orders 1, 2 and 3 only");
  }
}

}  // namespace

IdentityResult verify_closed_form_identity(int order, long n) {
  if (n < 0) throw InvalidInput("negative quantum number");
  IdentityResult res;
  if (order != 1 && n % 2 == 1) {
    res.pass = false;
    res.detail = "closed-form rows at order " + std::to_string(order) + " are for even n";
    return res;
  }
  const long kp = n / 2;
  for (long k = -order; k <= kp + order; ++k) {
    Rational acc(0);
    for (const auto& [off, w] : closed_form_row(order, n, k)) acc += w * h_or_zero(n, k + off);
    if (sgn(acc) != 0) {
      res.pass = false;
      res.witness_k = k;
      res.detail = "row k=" + std::to_string(k) + " evaluates to " + acc.get_str();
      return res;
    }
  }
  return res;
}

std::vector<LinearCombination> generated_identity_rows(int order, long n) {
  if (order < 1 || order > 3) throw InvalidInput("recursion identities exist for orders 1, 2 and 3 only");
  const AnsatzCoefficients a = AnsatzCoefficients::from_tables(n, order);
  ExpansionOptions opts;
  opts.symbolic_hermite = true;
  const FormalSeries r = expand_difference_residual(n, order, a.to_bindings(), {}, opts);
  std::vector<LinearCombination> rows;
  for (const auto& [key, c] : r.terms())
    if (key.second - key.first == 2 * order) rows.push_back(c);
  return rows;
}

IdentityResult verify_recursion_identity(int order, long n) {
  if (order < 1 || order > 3) throw InvalidInput("recursion identities exist for orders 1, 2 and 3 only");
  if (n < 0) throw InvalidInput("negative quantum number");
  if (order == 1 || n % 2 == 0) {
    IdentityResult closed = verify_closed_form_identity(order, n);
    if (!closed.pass) return closed;
  }
  Bindings h;
  for (long k = 0; k <= n / 2; ++k) h[Unknown::hermite(static_cast<int>(k))] = hermite_coefficient(n, k);
  IdentityResult res;
  long idx = 0;
  for (const auto& row : generated_identity_rows(order, n)) {
    const LinearCombination v = row.substitute(h);
    if (v.has_unknowns() || sgn(v.constant()) != 0) {
      res.pass = false;
      res.witness_k = idx;
      res.detail = "generated row " + std::to_string(idx) + " leaves " + v.str();
      return res;
    }
    ++idx;
  }
  return res;
}

}  // namespace dho
