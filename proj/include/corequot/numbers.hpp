#pragma once

#include <gmpxx.h>

#include <string>

namespace corequot {

using Integer = mpz_class;
using Rational = mpq_class;

// Reduced to lowest terms with a positive denominator.
inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "n" or "n/d"; throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// "n" when the denominator is 1, otherwise "n/d".
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

Integer factorial(unsigned long n);
Integer integer_pow(const Integer& base, unsigned long exp);

}  // namespace corequot
