#include <cyclo/errors.hpp>
#include <cyclo/surd.hpp>

#include <cmath>

namespace cyclo {

int sign(const QuadraticSurd& s) {
  if (sgn(s.radicand) < 0) throw Error(Errc::invalid_argument, "negative radicand");
  const int sa = sgn(s.rational);
  const int sb = sgn(s.coefficient) * sgn(s.radicand);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger magnitude wins; compare squares.
  const int c = cmp(Rational(s.rational * s.rational), Rational(s.coefficient * s.coefficient * s.radicand));
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

int compare(const Rational& q, const QuadraticSurd& s) {
  return sign(QuadraticSurd{q - s.rational, -s.coefficient, s.radicand});
}

Integer floor(const QuadraticSurd& s) {
  // Start from a high-precision estimate, then correct with exact compares.
  mpf_class root(0, 256), estimate(0, 256);
  root = sqrt(mpf_class(s.radicand, 256));
  estimate = mpf_class(s.rational, 256) + mpf_class(s.coefficient, 256) * root;
  const mpf_class below(floor(estimate), 256);
  Integer k;
  mpz_set_f(k.get_mpz_t(), below.get_mpf_t());
  while (compare(Rational(k), s) > 0) --k;
  while (compare(Rational(k + 1), s) <= 0) ++k;
  return k;
}

double to_double(const QuadraticSurd& s) {
  return s.rational.get_d() + s.coefficient.get_d() * std::sqrt(s.radicand.get_d());
}

}  // namespace cyclo
