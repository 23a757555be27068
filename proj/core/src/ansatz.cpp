#include "dho/ansatz.hpp"

#include <string>

#include "dho/errors.hpp"
#include "dho/exact_core.hpp"

namespace dho {

AnsatzCoefficients AnsatzCoefficients::from_tables(long n, long order) {
  if (n < 0 || order < 1) throw InvalidInput("ansatz needs n >= 0 and order >= 1");
  AnsatzCoefficients a;
  a.n = n;
  a.order = order;
  for (long l = 1; l <= order; ++l)
    for (long k = 1; k <= l; ++k) a.alpha[{k, l}] = alpha_coefficient(n, k, l);
  for (long k = 0; k <= n / 2; ++k)
    for (long l = 1; l <= order; ++l) {
      // n = 0, 1 have only k = 0, where beta is fixed for every l.
      a.beta[{k, l}] = (k == 0) ? Rational(l == 1 ? 1 : 0) : beta_coefficient(n, k, l);
    }
  for (long m = 0; m <= order; ++m) a.lambda.push_back(eigenvalue_coefficient(n, m));
  return a;
}

AnsatzCoefficients AnsatzCoefficients::from_bindings(long n, long order, const Bindings& b) {
  AnsatzCoefficients a;
  a.n = n;
  a.order = order;
  auto get = [&](const Unknown& u) {
    auto it = b.find(u);
    if (it == b.end()) throw InvalidInput("missing binding " + u.name());
    return it->second;
  };
  for (long l = 1; l <= order; ++l)
    for (long k = 1; k <= l; ++k)
      a.alpha[{k, l}] = get(Unknown::alpha(static_cast<int>(k), static_cast<int>(l)));
  for (long k = 0; k <= n / 2; ++k)
    for (long l = 1; l <= order; ++l)
      a.beta[{k, l}] = (k == 0) ? Rational(l == 1 ? 1 : 0)
                                : get(Unknown::beta(static_cast<int>(k), static_cast<int>(l)));
  for (long m = 0; m <= order; ++m) a.lambda.push_back(get(Unknown::lambda(static_cast<int>(m))));
  return a;
}

Bindings AnsatzCoefficients::to_bindings() const {
  Bindings b;
  for (const auto& [kl, v] : alpha)
    b[Unknown::alpha(static_cast<int>(kl.first), static_cast<int>(kl.second))] = v;
  for (const auto& [kl, v] : beta)
    if (kl.first > 0) b[Unknown::beta(static_cast<int>(kl.first), static_cast<int>(kl.second))] = v;
  for (size_t m = 0; m < lambda.size(); ++m) b[Unknown::lambda(static_cast<int>(m))] = lambda[m];
  return b;
}

}  // namespace dho
