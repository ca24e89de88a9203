#pragma once

#include <cyclo/rational.hpp>
#include <cyclo/trace_metric.hpp>

namespace cyclo {

// Closed forms for the distance moments over B(p,N) x B(p,N). Everything is
// evaluated in exact rational arithmetic.

/// Sum of a^r for a in [-N, N], 0 <= r <= 4.
Rational power_sum(int r, int n);

/// M_2 = (2/3)(p^3 - 2p^2 + 1) N (N+1).
Rational m2_closed(const BoxSpec& box);

/// (2/45) N (N+1) (p-1) (10N^2 p + 4N^2 + 10Np + 4N - 3). Equal to the double
/// sum of (a_i - b_i)^2 (a_j - b_j)^2 over i, j and all pairs, divided by the
/// number of pairs (2N+1)^(2p-2).
Rational double_square_sum_normalized(const BoxSpec& box);

/// M_4 = (2/45) N (N+1) (p-1) ((2N^2 + 2N)(5p^5 - 8p^4 + p^3 + 8p^2 - 21p - 18)
///       - 3 (p^2 - p - 1)^2).
Rational m4_closed(const BoxSpec& box);

/// mu = (2/3) p^3 N^2, the leading term of M_2.
Rational mu(const BoxSpec& box);

/// Mean of (d^2 - mu)^2 over all pairs: M_4 - 2 mu M_2 + mu^2.
Rational r_moment_closed(const BoxSpec& box);

/// R / (6 eps^2 mu^2). Bounds the fraction of pairs whose p^(3/2)-normalized
/// distance is more than eps away from 1/sqrt(6). Throws
/// Error(non_positive_epsilon) for eps <= 0.
Rational concentration_bound(const Rational& epsilon, const BoxSpec& box);
Rational concentration_bound(double epsilon, const BoxSpec& box);

enum class MomentSource { closed_form, brute_force };

struct MomentReport {
  BoxSpec box;
  Rational m2;
  Rational m4;
  Rational mu;
  Rational r_moment;
  MomentSource source = MomentSource::closed_form;
};

MomentReport closed_form_report(const BoxSpec& box);

}  // namespace cyclo
