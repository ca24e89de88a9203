#pragma once

#include <cyclo/element.hpp>
#include <cyclo/rational.hpp>
#include <cyclo/rng.hpp>
#include <cyclo/surd.hpp>
#include <cyclo/trace_metric.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cyclo {

inline constexpr std::uint64_t kDefaultEvaluationBudget = 1'000'000'000;

struct EnumerationOptions {
  /// Maximum number of difference vectors to visit; Error(budget_exceeded)
  /// is thrown before any work starts if the box needs more.
  std::uint64_t budget = kDefaultEvaluationBudget;
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 0;
};

/// (2N+1)^(p-1).
Integer box_size(const BoxSpec& box);

/// (4N+1)^(p-1), the number of distinct differences a - b of box points.
Integer difference_vector_count(const BoxSpec& box);

/// Weighted sums over all difference vectors delta in [-2N, 2N]^(p-1), each
/// weighted by the number of ordered pairs (a, b) with a - b = delta, namely
/// prod_i (2N + 1 - |delta_i|). Every sum therefore equals the corresponding
/// double sum over B(p,N) x B(p,N).
struct DifferenceSums {
  Integer pairs;             ///< sum of weights, (2N+1)^(2p-2)
  Integer sum_d2;            ///< sum of d^2
  Integer sum_d4;            ///< sum of d^4
  Integer sum_e2_sq;         ///< sum of (sum_i delta_i^2)^2
  Integer sum_centered_sq;   ///< sum of (3 d^2 - 2 p^3 N^2)^2 = 9 (d^2 - mu)^2
  Integer max_d2;
  std::vector<std::int64_t> argmax;  ///< first delta (lexicographic) reaching max_d2
};

DifferenceSums enumerate_differences(const BoxSpec& box, const EnumerationOptions& opts = {});

/// M_k by enumeration, k in {2, 4}. Odd k throws Error(odd_moment_unsupported),
/// other even k Error(unsupported_exponent).
Rational brute_moment(const BoxSpec& box, int k, const EnumerationOptions& opts = {});

/// Mean of (d^2 - mu)^2, computed without going through M_2 or M_4.
Rational brute_r_moment(const BoxSpec& box, const EnumerationOptions& opts = {});

/// The unnormalized double sum over i, j and all pairs of
/// (a_i - b_i)^2 (a_j - b_j)^2.
Integer brute_double_square_sum_raw(const BoxSpec& box, const EnumerationOptions& opts = {});
Rational brute_double_square_sum_normalized(const BoxSpec& box, const EnumerationOptions& opts = {});

Rational brute_diameter_sq(const BoxSpec& box, const EnumerationOptions& opts = {});

/// Two independent box points, every coordinate uniform on [-N, N].
std::pair<CycloElement, CycloElement> sample_pair(const BoxSpec& box, CounterRng& rng);

/// Decides |d / (2N p^(3/2)) - 1/sqrt(6)| > eps exactly. The condition is
/// d^2 < L or d^2 > U with L, U = 4 N^2 p^3 (eps^2 + 1/6 -/+ eps sqrt(6)/3);
/// the lower region is empty once eps >= 1/sqrt(6).
class OutlierClassifier {
 public:
  OutlierClassifier(const BoxSpec& box, const Rational& epsilon);

  bool is_outlier(const Rational& d2) const;
  bool is_outlier(const Integer& d2) const;

  const std::optional<QuadraticSurd>& lower() const noexcept { return lower_; }
  const QuadraticSurd& upper() const noexcept { return upper_; }

  /// Integer d^2 is an outlier iff d^2 <= lower_cut or d^2 > upper_cut. Both
  /// thresholds are irrational, so these floors are exact cut points.
  const std::optional<Integer>& lower_cut() const noexcept { return lower_cut_; }
  const Integer& upper_cut() const noexcept { return upper_cut_; }

 private:
  std::optional<QuadraticSurd> lower_;
  QuadraticSurd upper_;
  std::optional<Integer> lower_cut_;
  Integer upper_cut_;
};

enum class ConcentrationMode { exhaustive, monte_carlo };

struct ConcentrationReport {
  BoxSpec box;
  Rational epsilon{};
  ConcentrationMode mode = ConcentrationMode::exhaustive;
  std::uint64_t samples = 0;  ///< Monte Carlo only
  std::uint64_t seed = 0;     ///< Monte Carlo only
  Integer outliers{};           ///< outlier pairs (weighted count when exhaustive)
  Integer population{};         ///< pairs examined: #B^2 or samples
  Rational outlier_fraction{};  ///< outliers / population
  Rational mean_d2{};           ///< exact mean of d^2 over the population
  double mean_normsq = 0.0;   ///< mean of d^2 / (4 N^2 p^3)
  Rational chebyshev_bound{};
};

ConcentrationReport concentration_experiment(const BoxSpec& box, const Rational& epsilon,
                                             ConcentrationMode mode, std::uint64_t samples,
                                             std::uint64_t seed,
                                             const EnumerationOptions& opts = {});

}  // namespace cyclo
