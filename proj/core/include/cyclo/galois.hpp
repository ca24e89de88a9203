#pragma once

#include <cyclo/element.hpp>
#include <cyclo/rational.hpp>

#include <optional>
#include <vector>

namespace cyclo {

/// sigma_k, the automorphism of Q(w) with w -> w^k, 1 <= k <= p-1. The
/// coefficient of w^i moves to w^(k i mod p), so this is a pure permutation
/// of coordinates.
CycloElement apply_automorphism(const CycloElement& a, int k);

/// Distinct Galois conjugates of a, starting with a itself.
std::vector<CycloElement> conjugates(const CycloElement& a);

struct SubfieldProfile {
  CycloElement element;
  std::vector<int> stabilizer;  ///< sorted k with sigma_k(a) = a
  int degree = 0;               ///< [Q(a):Q] = (p-1) / |stabilizer|
};

SubfieldProfile subfield_profile(const CycloElement& a);
int field_degree(const CycloElement& a);

/// Q(a) is a subfield of Q(b). The Galois group is cyclic, so this reduces to
/// [Q(a):Q] dividing [Q(b):Q].
bool subfield_contains(const CycloElement& a, const CycloElement& b);

struct KrasnerReport {
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  Rational dist_sq;
  /// min over conjugates a_i != a of d(a, a_i)^2; empty when a is rational.
  std::optional<Rational> min_conjugate_dist_sq;
  /// min_conjugate_dist_sq - 4 dist_sq; empty when a is rational.
  std::optional<Rational> margin;
};

/// Checks 4 d(a,b)^2 < d(a,a_i)^2 for every conjugate a_i != a (strict, exact)
/// and whether Q(a) is contained in Q(b). A zero margin counts as failure.
KrasnerReport krasner_check(const CycloElement& a, const CycloElement& b);

struct PrimitiveWitness {
  int n = 0;
  CycloElement gamma;
  int degree = 0;
};

/// Smallest n in [1, max_n] such that a + b/n generates Q(a, b). Throws
/// Error(search_exhausted) when no such n exists up to max_n.
PrimitiveWitness primitive_element_search(const CycloElement& a, const CycloElement& b, int max_n);

}  // namespace cyclo
