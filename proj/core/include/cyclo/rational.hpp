#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cyclo {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "n/d" or a decimal literal such as "-0.05" into an exact
/// rational in lowest terms. Throws Error(parse_error) on malformed input or
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact value of a finite double (binary expansion, no rounding).
Rational rational_from_double(double value);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// sqrt(q) rounded to nearest-even double. q must be non-negative.
double sqrt_to_double(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// num/den in lowest terms. gmpxx leaves two-argument constructions
/// uncanonicalized, and operator== compares the raw fields.
inline Rational fraction(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace cyclo
