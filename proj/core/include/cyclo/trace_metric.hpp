#pragma once

#include <cyclo/element.hpp>
#include <cyclo/rational.hpp>

#include <vector>

namespace cyclo {

/// (Tr(a w^j))_{j=1..p-1}. The metric on K is the Euclidean distance between
/// these vectors.
struct TraceVector {
  int p = 0;
  std::vector<Rational> entries;

  friend bool operator==(const TraceVector&, const TraceVector&) = default;
};

/// The hypercube of integral elements whose coordinates all lie in [-N, N].
class BoxSpec {
 public:
  BoxSpec(int p, int n);

  int p() const noexcept { return p_; }
  int n() const noexcept { return n_; }

  /// True when every coordinate of a is an integer in [-N, N].
  bool contains(const CycloElement& a) const;

  friend bool operator==(const BoxSpec&, const BoxSpec&) = default;

 private:
  int p_;
  int n_;
};

/// Tr(a) = -(a_1 + ... + a_{p-1}).
Rational trace(const CycloElement& a);

/// Entry j is Tr(a) + p * a_{p-j}.
TraceVector trace_vector(const CycloElement& a);

/// Sum of squared coordinates (not of the trace vector).
Rational euclidean_norm_sq(const CycloElement& a);

/// ||a||^2 = p^2 ||a||_E^2 - (p+1) Tr(a)^2.
Rational norm_sq(const CycloElement& a);
double norm(const CycloElement& a);

Rational dist_sq(const CycloElement& a, const CycloElement& b);
/// sqrt(dist_sq) correctly rounded to double.
double dist(const CycloElement& a, const CycloElement& b);

/// Square of the box diameter, 4 N^2 p^2 (p-1).
Rational diameter_sq(const BoxSpec& box);

/// The pair N(w - w^2 + ... - w^(p-1)) and its negative, which realizes the
/// diameter of the box.
std::pair<CycloElement, CycloElement> diameter_pair(const BoxSpec& box);

enum class Normalization {
  diameter,  ///< divide by 2Np sqrt(p-1); the box has diameter 1
  p32,       ///< divide by 2N p^(3/2)
};

/// Square of the normalizing denominator for the chosen mode.
Rational normalizer_sq(const BoxSpec& box, Normalization mode);

/// d(a,b) scaled by the box normalizer. Both points must be box members.
double normalized_dist(const CycloElement& a, const CycloElement& b, const BoxSpec& box,
                       Normalization mode);

}  // namespace cyclo
