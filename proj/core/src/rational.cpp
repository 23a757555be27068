#include "dho/rational.hpp"

#include <cmath>
#include <mpfr.h>

#include "dho/errors.hpp"

namespace dho {

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0)
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

Rational pow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer odd_double_factorial(unsigned long k) {
  if (k == 0) return 1;
  Integer f;
  mpz_2fac_ui(f.get_mpz_t(), 2 * k - 1);
  return f;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  Integer num, den(1);
  if (num.set_str(text.substr(0, slash), 10) != 0 ||
      (slash != std::string::npos && den.set_str(text.substr(slash + 1), 10) != 0))
    throw InvalidInput("not a rational: " + text);
  if (den == 0) throw InvalidInput("zero denominator: " + text);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

double to_double(const Rational& q) {
  mpfr_t t;
  mpfr_init2(t, 53);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw InvalidInput("non-finite value");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

}  // namespace dho
