#include <cyclo/errors.hpp>
#include <cyclo/moments.hpp>

#include <string>

namespace cyclo {

Rational power_sum(int r, int n) {
  if (r < 0 || r > 4) throw Error(Errc::unsupported_exponent, "power sums are implemented for 0 <= r <= 4, got " + std::to_string(r));
  if (n < 0) throw Error(Errc::invalid_argument, "N must be non-negative");
  const Integer N = n;
  switch (r) {
    case 0: return Rational(2 * N + 1);
    case 2: return fraction(N * (N + 1) * (2 * N + 1), 3);
    case 4: return fraction(N * (N + 1) * (2 * N + 1) * (3 * N * N + 3 * N - 1), 15);
    default: return Rational(0);  // odd r: a^r + (-a)^r = 0
  }
}

Rational m2_closed(const BoxSpec& box) {
  const Integer p = box.p(), N = box.n();
  Rational out(2 * (p * p * p - 2 * p * p + 1) * N * (N + 1), 3);
  out.canonicalize();
  return out;
}

Rational double_square_sum_normalized(const BoxSpec& box) {
  const Integer p = box.p(), N = box.n();
  Rational out(2 * N * (N + 1) * (p - 1) * (10 * N * N * p + 4 * N * N + 10 * N * p + 4 * N - 3), 45);
  out.canonicalize();
  return out;
}

Rational m4_closed(const BoxSpec& box) {
  const Integer p = box.p(), N = box.n();
  const Integer p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p;
  const Integer shape = 5 * p5 - 8 * p4 + p3 + 8 * p2 - 21 * p - 18;
  const Integer offset = p2 - p - 1;
  Rational out(2 * N * (N + 1) * (p - 1) * ((2 * N * N + 2 * N) * shape - 3 * offset * offset), 45);
  out.canonicalize();
  return out;
}

Rational mu(const BoxSpec& box) {
  const Integer p = box.p(), N = box.n();
  Rational out(2 * p * p * p * N * N, 3);
  out.canonicalize();
  return out;
}

Rational r_moment_closed(const BoxSpec& box) {
  const Rational m = mu(box);
  return m4_closed(box) - 2 * m * m2_closed(box) + m * m;
}

Rational concentration_bound(const Rational& epsilon, const BoxSpec& box) {
  if (sgn(epsilon) <= 0) throw Error(Errc::non_positive_epsilon, "epsilon must be positive, got " + to_string(epsilon));
  const Rational m = mu(box);
  return r_moment_closed(box) / (6 * epsilon * epsilon * m * m);
}

Rational concentration_bound(double epsilon, const BoxSpec& box) {
  if (!(epsilon > 0.0)) throw Error(Errc::non_positive_epsilon, "epsilon must be positive");
  return concentration_bound(rational_from_double(epsilon), box);
}

MomentReport closed_form_report(const BoxSpec& box) {
  return MomentReport{box, m2_closed(box), m4_closed(box), mu(box), r_moment_closed(box),
                      MomentSource::closed_form};
}

}  // namespace cyclo
