#include <string>

#include "dho/errors.hpp"
#include "dho/exact_core.hpp"

namespace dho {

Rational gamma_half_ratio(long k, long l) {
  if (k < 1 || l < 1)
    throw InvalidInput("gamma_half_ratio needs k >= 1 and l >= 1, got (" +
                       std::to_string(k) + "," + std::to_string(l) + ")");
  Rational r(odd_double_factorial(static_cast<unsigned long>(k)),
             factorial(static_cast<unsigned long>(k + l - 1)));
  r.canonicalize();
  return r * pow2(-k);
}

// h_k = (-1)^(k'+k) 2^(2k+p) n! / ((2k+p)! (k'-k)!)
Rational hermite_coefficient(long n, long k) {
  if (n < 0) throw InvalidInput("negative quantum number");
  const long kp = n / 2, p = n % 2;
  if (k < 0 || k > kp)
    throw InvalidInput("hermite index " + std::to_string(k) + " outside [0," +
                       std::to_string(kp) + "]");
  Rational h(factorial(static_cast<unsigned long>(n)),
             factorial(static_cast<unsigned long>(2 * k + p)) *
                 factorial(static_cast<unsigned long>(kp - k)));
  h.canonicalize();
  h *= pow2(2 * k + p);
  if ((kp + k) % 2) h = -h;
  return h;
}

std::vector<Rational> hermite_coefficients(long n) {
  std::vector<Rational> h;
  for (long k = 0; k <= n / 2; ++k) h.push_back(hermite_coefficient(n, k));
  return h;
}

long exponent_slot_count(long order) { return order < 1 ? 0 : order * (order + 1) / 2; }

}  // namespace dho
