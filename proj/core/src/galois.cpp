#include <cyclo/errors.hpp>
#include <cyclo/galois.hpp>
#include <cyclo/trace_metric.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace cyclo {

CycloElement apply_automorphism(const CycloElement& a, int k) {
  const int p = a.p();
  if (k < 1 || k > p - 1)
    throw Error(Errc::bad_automorphism_index,
                "k=" + std::to_string(k) + " outside 1.." + std::to_string(p - 1));
  std::vector<Rational> coeffs(static_cast<std::size_t>(p - 1));
  for (int i = 1; i < p; ++i) {
    const auto target = static_cast<std::size_t>((static_cast<long>(k) * i) % p);
    coeffs[target - 1] = a.coeff(i);
  }
  return CycloElement::make(p, std::move(coeffs));
}

std::vector<CycloElement> conjugates(const CycloElement& a) {
  std::vector<CycloElement> out{a};
  for (int k = 2; k < a.p(); ++k) {
    auto image = apply_automorphism(a, k);
    if (std::find(out.begin(), out.end(), image) == out.end()) out.push_back(std::move(image));
  }
  return out;
}

SubfieldProfile subfield_profile(const CycloElement& a) {
  SubfieldProfile profile{a, {1}, 0};
  for (int k = 2; k < a.p(); ++k)
    if (apply_automorphism(a, k) == a) profile.stabilizer.push_back(k);
  profile.degree = (a.p() - 1) / static_cast<int>(profile.stabilizer.size());
  return profile;
}

int field_degree(const CycloElement& a) { return subfield_profile(a).degree; }

bool subfield_contains(const CycloElement& a, const CycloElement& b) {
  require_same_field(a, b);
  return field_degree(b) % field_degree(a) == 0;
}

KrasnerReport krasner_check(const CycloElement& a, const CycloElement& b) {
  require_same_field(a, b);
  KrasnerReport report;
  report.dist_sq = dist_sq(a, b);

  for (int k = 2; k < a.p(); ++k) {
    const auto image = apply_automorphism(a, k);
    if (image == a) continue;
    Rational d = dist_sq(a, image);
    if (!report.min_conjugate_dist_sq || d < *report.min_conjugate_dist_sq)
      report.min_conjugate_dist_sq = std::move(d);
  }

  if (report.min_conjugate_dist_sq) {
    report.margin = Rational(*report.min_conjugate_dist_sq - 4 * report.dist_sq);
    report.hypothesis_holds = sgn(*report.margin) > 0;
  } else {
    report.hypothesis_holds = true;  // no conjugates besides a itself
  }
  report.conclusion_holds = subfield_contains(a, b);
  return report;
}

PrimitiveWitness primitive_element_search(const CycloElement& a, const CycloElement& b, int max_n) {
  require_same_field(a, b);
  if (max_n < 1) throw Error(Errc::invalid_argument, "max_n must be >= 1");
  const int target = std::lcm(field_degree(a), field_degree(b));
  for (int n = 1; n <= max_n; ++n) {
    auto gamma = a + Rational(1, n) * b;
    const int degree = field_degree(gamma);
    if (degree == target) return {n, std::move(gamma), degree};
  }
  throw Error(Errc::search_exhausted,
              "no n <= " + std::to_string(max_n) + " gives a generator of degree " + std::to_string(target));
}

}  // namespace cyclo
