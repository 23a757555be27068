#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dho/formal_series.hpp"
#include "dho/rational.hpp"

namespace dho {

// Full set of exact coefficients for the order-m solution of state n:
// alpha_{k,l} and beta_{k,l} with l <= order, lambda^(0..order).
struct AnsatzCoefficients {
  long n = 0;
  long order = 0;
  std::map<std::pair<long, long>, Rational> alpha;
  std::map<std::pair<long, long>, Rational> beta;  // k = 0..k', l = 1..order
  std::vector<Rational> lambda;

  long kprime() const { return n / 2; }
  int parity() const { return static_cast<int>(n % 2); }

  // Throws OutOfTable when any slot is missing from the tables.
  static AnsatzCoefficients from_tables(long n, long order);
  // Rebuild from derivation bindings.
  static AnsatzCoefficients from_bindings(long n, long order, const Bindings& b);
  Bindings to_bindings() const;
};

}  // namespace dho
