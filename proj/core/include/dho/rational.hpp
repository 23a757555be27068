#pragma once

#include <gmpxx.h>

#include <string>

namespace dho {

// mpq_class keeps itself canonical after every arithmetic operation
// (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational pow2(long e);
Rational pow(const Rational& base, unsigned long e);
Integer factorial(unsigned long n);
// (2k-1)!! with (-1)!! = 1.
Integer odd_double_factorial(unsigned long k);

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
// Correctly rounded conversion.
double to_double(const Rational& q);
// Exact conversion of a finite double.
Rational from_double(double x);

}  // namespace dho
