#include <cyclo/empirical.hpp>
#include <cyclo/errors.hpp>
#include <cyclo/moments.hpp>
#include <cyclo/parallel.hpp>

#include <limits>
#include <string>

namespace cyclo {

namespace {

using i128 = int128_t;

constexpr i128 kI128Max = static_cast<i128>((~static_cast<uint128_t>(0)) >> 1);

Integer to_integer(i128 v) {
  const bool negative = v < 0;
  auto mag = negative ? static_cast<uint128_t>(-(v + 1)) + 1 : static_cast<uint128_t>(v);
  Integer out = static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64));
  out <<= 64;
  out += static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
  return negative ? Integer(-out) : out;
}

// Values outside the i128 range saturate; only used for cut points.
i128 to_i128_saturating(const Integer& z) {
  if (mpz_sizeinbase(z.get_mpz_t(), 2) >= 126) return sgn(z) < 0 ? -kI128Max : kI128Max;
  const bool negative = sgn(z) < 0;
  Integer mag = abs(z);
  Integer high = mag >> 64;
  Integer low = mag - (high << 64);
  auto v = (static_cast<uint128_t>(mpz_get_ui(high.get_mpz_t())) << 64) | mpz_get_ui(low.get_mpz_t());
  return negative ? -static_cast<i128>(v) : static_cast<i128>(v);
}

// Exact running sum: a 128-bit fast path that spills into GMP on overflow.
class WideSum {
 public:
  void add(i128 term) {
    i128 next;
    if (__builtin_add_overflow(partial_, term, &next)) {
      spill_ += to_integer(partial_);
      partial_ = term;
    } else {
      partial_ = next;
    }
  }

  // w * a * b, falling back to GMP when the product leaves 128 bits.
  void add_product(i128 w, i128 a, i128 b) {
    i128 wa, wab;
    if (!__builtin_mul_overflow(w, a, &wa) && !__builtin_mul_overflow(wa, b, &wab)) {
      add(wab);
    } else {
      spill_ += to_integer(w) * to_integer(a) * to_integer(b);
    }
  }

  void merge(const WideSum& other) {
    spill_ += other.spill_;
    add(other.partial_);
  }

  Integer value() const { return spill_ + to_integer(partial_); }

 private:
  i128 partial_ = 0;
  Integer spill_;
};

struct OutlierCuts {
  bool has_lower = false;
  i128 lower = 0;  // outlier if d2 <= lower
  i128 upper = 0;  // outlier if d2 > upper

  bool operator()(i128 d2) const { return (has_lower && d2 <= lower) || d2 > upper; }
};

OutlierCuts make_cuts(const OutlierClassifier& c) {
  OutlierCuts cuts;
  if (c.lower_cut()) {
    cuts.has_lower = true;
    cuts.lower = to_i128_saturating(*c.lower_cut());
  }
  cuts.upper = to_i128_saturating(c.upper_cut());
  return cuts;
}

struct ChunkTotals {
  WideSum pairs, d2, d4, e2_sq, centered_sq, outliers;
  i128 max_d2 = -1;
  std::uint64_t argmax_index = 0;

  void merge(const ChunkTotals& o) {
    pairs.merge(o.pairs);
    d2.merge(o.d2);
    d4.merge(o.d4);
    e2_sq.merge(o.e2_sq);
    centered_sq.merge(o.centered_sq);
    outliers.merge(o.outliers);
    if (o.max_d2 > max_d2) {
      max_d2 = o.max_d2;
      argmax_index = o.argmax_index;
    }
  }
};

constexpr std::size_t kEnumerationChunks = 256;

std::uint64_t checked_difference_count(const BoxSpec& box, const EnumerationOptions& opts) {
  const Integer count = difference_vector_count(box);
  if (count > Integer(static_cast<unsigned long>(opts.budget)))
    throw Error(Errc::budget_exceeded, "B(" + std::to_string(box.p()) + "," + std::to_string(box.n()) + ") needs " +
                                           to_string(count) + " difference vectors, budget is " +
                                           std::to_string(opts.budget));
  return mpz_get_ui(count.get_mpz_t());
}

// Visits every difference vector delta in [-2N, 2N]^(p-1) in lexicographic
// order (delta_1 most significant). Index -> digits is mixed radix 4N+1.
ChunkTotals enumerate_impl(const BoxSpec& box, const EnumerationOptions& opts, const OutlierCuts* cuts) {
  const std::uint64_t count = checked_difference_count(box, opts);
  const int dim = box.p() - 1;
  const std::int64_t two_n = 2 * static_cast<std::int64_t>(box.n());
  const std::int64_t radix = 2 * two_n + 1;
  const i128 p = box.p();
  const i128 p_sq = p * p;
  const i128 centre = 2 * p * p * p * box.n() * box.n();  // 3 mu

  std::vector<i128> digit_weight(static_cast<std::size_t>(radix));
  for (std::int64_t d = 0; d < radix; ++d) digit_weight[static_cast<std::size_t>(d)] = two_n + 1 - std::abs(d - two_n);

  std::vector<ChunkTotals> partial(kEnumerationChunks);
  parallel_chunks(count, kEnumerationChunks, opts.threads, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    if (begin == end) return;
    ChunkTotals& acc = partial[chunk];
    std::vector<std::int64_t> digits(static_cast<std::size_t>(dim));
    std::uint64_t rest = begin;
    for (int i = dim - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(radix));
      rest /= static_cast<std::uint64_t>(radix);
    }

    for (std::uint64_t index = begin; index < end; ++index) {
      i128 weight = 1;
      std::int64_t e = 0, t = 0;
      for (auto digit : digits) {
        const std::int64_t delta = digit - two_n;
        e += delta * delta;
        t += delta;
        weight *= digit_weight[static_cast<std::size_t>(digit)];
      }
      const i128 q = p_sq * e - (p + 1) * static_cast<i128>(t) * t;

      acc.pairs.add(weight);
      acc.d2.add_product(weight, q, 1);
      acc.d4.add_product(weight, q, q);
      acc.e2_sq.add_product(weight, e, e);
      const i128 c = 3 * q - centre;
      acc.centered_sq.add_product(weight, c, c);
      if (q > acc.max_d2) {
        acc.max_d2 = q;
        acc.argmax_index = index;
      }
      if (cuts && (*cuts)(q)) acc.outliers.add(weight);

      for (int i = dim - 1; i >= 0; --i) {
        auto& d = digits[static_cast<std::size_t>(i)];
        if (++d < radix) break;
        d = 0;
      }
    }
  });

  ChunkTotals total;
  for (const auto& c : partial) total.merge(c);
  return total;
}

std::vector<std::int64_t> decode_difference(const BoxSpec& box, std::uint64_t index) {
  const int dim = box.p() - 1;
  const std::int64_t two_n = 2 * static_cast<std::int64_t>(box.n());
  const auto radix = static_cast<std::uint64_t>(2 * two_n + 1);
  std::vector<std::int64_t> delta(static_cast<std::size_t>(dim));
  for (int i = dim - 1; i >= 0; --i) {
    delta[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(index % radix) - two_n;
    index /= radix;
  }
  return delta;
}

void draw_point(CounterRng& rng, std::int64_t n, std::span<std::int64_t> out) {
  for (auto& c : out) c = rng.uniform(-n, n);
}

Rational scale_to_p32(const Rational& d2, const BoxSpec& box) {
  return d2 / normalizer_sq(box, Normalization::p32);
}

}  // namespace

Integer box_size(const BoxSpec& box) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2 * static_cast<unsigned long>(box.n()) + 1, static_cast<unsigned long>(box.p() - 1));
  return out;
}

Integer difference_vector_count(const BoxSpec& box) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 4 * static_cast<unsigned long>(box.n()) + 1, static_cast<unsigned long>(box.p() - 1));
  return out;
}

DifferenceSums enumerate_differences(const BoxSpec& box, const EnumerationOptions& opts) {
  const ChunkTotals t = enumerate_impl(box, opts, nullptr);
  return DifferenceSums{t.pairs.value(),       t.d2.value(),  t.d4.value(),
                        t.e2_sq.value(),       t.centered_sq.value(),
                        to_integer(t.max_d2),  decode_difference(box, t.argmax_index)};
}

Rational brute_moment(const BoxSpec& box, int k, const EnumerationOptions& opts) {
  if (k % 2 != 0)
    throw Error(Errc::odd_moment_unsupported, "odd moments involve irrational distances (k=" + std::to_string(k) + ")");
  if (k != 2 && k != 4) throw Error(Errc::unsupported_exponent, "brute-force moments support k = 2, 4");
  const auto sums = enumerate_differences(box, opts);
  return fraction(k == 2 ? sums.sum_d2 : sums.sum_d4, sums.pairs);
}

Rational brute_r_moment(const BoxSpec& box, const EnumerationOptions& opts) {
  const auto sums = enumerate_differences(box, opts);
  Rational out(sums.sum_centered_sq, 9 * sums.pairs);
  out.canonicalize();
  return out;
}

Integer brute_double_square_sum_raw(const BoxSpec& box, const EnumerationOptions& opts) {
  return enumerate_differences(box, opts).sum_e2_sq;
}

Rational brute_double_square_sum_normalized(const BoxSpec& box, const EnumerationOptions& opts) {
  const auto sums = enumerate_differences(box, opts);
  Rational out(sums.sum_e2_sq, sums.pairs);
  out.canonicalize();
  return out;
}

Rational brute_diameter_sq(const BoxSpec& box, const EnumerationOptions& opts) {
  return Rational(enumerate_differences(box, opts).max_d2);
}

std::pair<CycloElement, CycloElement> sample_pair(const BoxSpec& box, CounterRng& rng) {
  const auto dim = static_cast<std::size_t>(box.p() - 1);
  std::vector<std::int64_t> raw(2 * dim);
  draw_point(rng, box.n(), std::span(raw).first(dim));
  draw_point(rng, box.n(), std::span(raw).last(dim));
  std::vector<Rational> a(dim), b(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    a[i] = static_cast<long>(raw[i]);
    b[i] = static_cast<long>(raw[dim + i]);
  }
  return {CycloElement::make(box.p(), std::move(a)), CycloElement::make(box.p(), std::move(b))};
}

OutlierClassifier::OutlierClassifier(const BoxSpec& box, const Rational& epsilon) {
  if (sgn(epsilon) <= 0) throw Error(Errc::non_positive_epsilon, "epsilon must be positive, got " + to_string(epsilon));
  const Rational scale = normalizer_sq(box, Normalization::p32);  // 4 N^2 p^3
  const Rational centre = scale * (epsilon * epsilon + Rational(1, 6));
  const Rational spread = scale * epsilon / 3;

  upper_ = QuadraticSurd{centre, spread, Rational(6)};
  upper_cut_ = floor(upper_);

  if (6 * epsilon * epsilon < 1) {
    lower_ = QuadraticSurd{centre, -spread, Rational(6)};
    Integer cut = floor(*lower_);
    if (compare(Rational(cut), *lower_) == 0) --cut;
    lower_cut_ = cut;
  }
}

bool OutlierClassifier::is_outlier(const Rational& d2) const {
  return (lower_ && compare(d2, *lower_) < 0) || compare(d2, upper_) > 0;
}

bool OutlierClassifier::is_outlier(const Integer& d2) const {
  return (lower_cut_ && d2 <= *lower_cut_) || d2 > upper_cut_;
}

ConcentrationReport concentration_experiment(const BoxSpec& box, const Rational& epsilon, ConcentrationMode mode,
                                             std::uint64_t samples, std::uint64_t seed,
                                             const EnumerationOptions& opts) {
  const OutlierClassifier classifier(box, epsilon);
  const OutlierCuts cuts = make_cuts(classifier);

  ConcentrationReport report{.box = box, .epsilon = epsilon, .mode = mode};
  report.chebyshev_bound = concentration_bound(epsilon, box);

  if (mode == ConcentrationMode::exhaustive) {
    const ChunkTotals t = enumerate_impl(box, opts, &cuts);
    report.outliers = t.outliers.value();
    report.population = t.pairs.value();
    report.mean_d2 = fraction(t.d2.value(), report.population);
  } else {
    if (samples == 0) throw Error(Errc::invalid_argument, "Monte Carlo needs at least one sample");
    report.samples = samples;
    report.seed = seed;

    const auto dim = static_cast<std::size_t>(box.p() - 1);
    const i128 p = box.p();
    constexpr std::size_t kSampleChunks = 64;
    struct SampleTotals {
      WideSum d2;
      std::uint64_t outliers = 0;
    };
    std::vector<SampleTotals> partial(kSampleChunks);
    parallel_chunks(samples, kSampleChunks, opts.threads, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
      SampleTotals& acc = partial[chunk];
      std::vector<std::int64_t> a(dim), b(dim);
      for (std::uint64_t i = begin; i < end; ++i) {
        CounterRng rng(seed, i);
        draw_point(rng, box.n(), a);
        draw_point(rng, box.n(), b);
        std::int64_t e = 0, t = 0;
        for (std::size_t j = 0; j < dim; ++j) {
          const std::int64_t delta = a[j] - b[j];
          e += delta * delta;
          t += delta;
        }
        const i128 q = p * p * e - (p + 1) * static_cast<i128>(t) * t;
        acc.d2.add(q);
        if (cuts(q)) ++acc.outliers;
      }
    });

    WideSum d2;
    std::uint64_t outliers = 0;
    for (const auto& c : partial) {
      d2.merge(c.d2);
      outliers += c.outliers;
    }
    report.outliers = static_cast<unsigned long>(outliers);
    report.population = static_cast<unsigned long>(samples);
    report.mean_d2 = fraction(d2.value(), report.population);
  }

  report.outlier_fraction = fraction(report.outliers, report.population);
  report.mean_normsq = scale_to_p32(report.mean_d2, box).get_d();
  return report;
}

}  // namespace cyclo
