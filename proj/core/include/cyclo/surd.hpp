#pragma once

#include <cyclo/rational.hpp>

namespace cyclo {

/// The real number rational + coefficient * sqrt(radicand), radicand >= 0.
struct QuadraticSurd {
  Rational rational;
  Rational coefficient;
  Rational radicand;
};

/// Exact sign (-1, 0, 1) of s. No floating point is involved.
int sign(const QuadraticSurd& s);

/// Exact three-way comparison of a rational against a surd: sign(q - s).
int compare(const Rational& q, const QuadraticSurd& s);

/// Largest integer <= s, exact.
Integer floor(const QuadraticSurd& s);

/// Nearest double approximation, for reporting only.
double to_double(const QuadraticSurd& s);

}  // namespace cyclo
