#include <cyclo/element.hpp>
#include <cyclo/empirical.hpp>
#include <cyclo/galois.hpp>
#include <cyclo/moments.hpp>
#include <cyclo/trace_metric.hpp>

#include <benchmark/benchmark.h>

#include <vector>

namespace {

cyclo::CycloElement sample_element(int p, long salt) {
  std::vector<cyclo::Rational> c(static_cast<std::size_t>(p - 1));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = cyclo::make_rational(static_cast<long>(i) * 7 % 11 - 5 + salt, 1 + static_cast<long>(i) % 4);
  return cyclo::CycloElement::make(p, std::move(c));
}

}  // namespace

static void BM_RingMul(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto a = sample_element(p, 1), b = sample_element(p, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RingMul)->Arg(5)->Arg(13)->Arg(101);

static void BM_DistSq(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto a = sample_element(p, 1), b = sample_element(p, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cyclo::dist_sq(a, b));
}
BENCHMARK(BM_DistSq)->Arg(5)->Arg(101);

static void BM_SubfieldProfile(benchmark::State& state) {
  const auto a = sample_element(static_cast<int>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(cyclo::subfield_profile(a));
}
BENCHMARK(BM_SubfieldProfile)->Arg(13)->Arg(101);

static void BM_ClosedMoments(benchmark::State& state) {
  const cyclo::BoxSpec box(101, 100);
  for (auto _ : state) benchmark::DoNotOptimize(cyclo::closed_form_report(box));
}
BENCHMARK(BM_ClosedMoments);

static void BM_Enumerate(benchmark::State& state) {
  const cyclo::BoxSpec box(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(cyclo::enumerate_differences(box, {.threads = 1}));
  state.SetItemsProcessed(state.iterations() * cyclo::difference_vector_count(box).get_si());
}
BENCHMARK(BM_Enumerate)->Args({5, 2})->Args({7, 1})->Args({7, 2})->Unit(benchmark::kMillisecond);

static void BM_MonteCarlo(benchmark::State& state) {
  const cyclo::BoxSpec box(101, 100);
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(cyclo::concentration_experiment(box, cyclo::make_rational(1, 20),
                                                             cyclo::ConcentrationMode::monte_carlo, samples, 1,
                                                             {.threads = 1}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
