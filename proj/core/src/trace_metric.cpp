#include <cyclo/errors.hpp>
#include <cyclo/trace_metric.hpp>

#include <string>

namespace cyclo {

BoxSpec::BoxSpec(int p, int n) : p_(p), n_(n) {
  require_odd_prime(p);
  if (n < 1) throw Error(Errc::invalid_argument, "box half-width N must be >= 1, got " + std::to_string(n));
}

bool BoxSpec::contains(const CycloElement& a) const {
  if (a.p() != p_) return false;
  for (const auto& c : a.coeffs()) {
    if (c.get_den() != 1) return false;
    if (abs(c.get_num()) > n_) return false;
  }
  return true;
}

Rational trace(const CycloElement& a) {
  Rational sum;
  for (const auto& c : a.coeffs()) sum += c;
  return -sum;
}

TraceVector trace_vector(const CycloElement& a) {
  const int p = a.p();
  const Rational tr = trace(a);
  TraceVector v{p, std::vector<Rational>(static_cast<std::size_t>(p - 1))};
  for (int j = 1; j < p; ++j) v.entries[static_cast<std::size_t>(j - 1)] = tr + p * a.coeff(p - j);
  return v;
}

Rational euclidean_norm_sq(const CycloElement& a) {
  Rational sum;
  for (const auto& c : a.coeffs()) sum += c * c;
  return sum;
}

Rational norm_sq(const CycloElement& a) {
  const long p = a.p();
  const Rational tr = trace(a);
  return p * p * euclidean_norm_sq(a) - (p + 1) * tr * tr;
}

double norm(const CycloElement& a) { return sqrt_to_double(norm_sq(a)); }

Rational dist_sq(const CycloElement& a, const CycloElement& b) { return norm_sq(a - b); }

double dist(const CycloElement& a, const CycloElement& b) { return sqrt_to_double(dist_sq(a, b)); }

Rational diameter_sq(const BoxSpec& box) {
  const Integer p = box.p(), n = box.n();
  return Rational(4 * n * n * p * p * (p - 1));
}

std::pair<CycloElement, CycloElement> diameter_pair(const BoxSpec& box) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(box.p() - 1));
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = (i % 2 == 0) ? box.n() : -box.n();
  auto alpha = CycloElement::make(box.p(), std::move(coeffs));
  auto beta = -alpha;
  return {std::move(alpha), std::move(beta)};
}

Rational normalizer_sq(const BoxSpec& box, Normalization mode) {
  const Integer p = box.p(), n = box.n();
  switch (mode) {
    case Normalization::diameter: return diameter_sq(box);
    case Normalization::p32: return Rational(4 * n * n * p * p * p);
  }
  throw Error(Errc::invalid_argument, "unknown normalization");
}

double normalized_dist(const CycloElement& a, const CycloElement& b, const BoxSpec& box,
                       Normalization mode) {
  require_same_field(a, b);
  if (a.p() != box.p())
    throw Error(Errc::modulus_mismatch, "box is over p=" + std::to_string(box.p()) +
                                            ", elements over p=" + std::to_string(a.p()));
  if (!box.contains(a) || !box.contains(b))
    throw Error(Errc::out_of_box, "normalized distance needs integer coordinates in [-" +
                                      std::to_string(box.n()) + ", " + std::to_string(box.n()) + "]");
  return sqrt_to_double(dist_sq(a, b) / normalizer_sq(box, mode));
}

}  // namespace cyclo
