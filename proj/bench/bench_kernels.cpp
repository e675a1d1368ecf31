#include "hitchin/generators.hpp"
#include "hitchin/kernels.hpp"
#include "hitchin/weights.hpp"

#include <benchmark/benchmark.h>

using namespace hitchin;

namespace {

PositiveOrthogonalFamily wide_family(int n, long weight)
{
  Rng rng(12345);
  return random_family(rng, n, Levi::torus(n), FamilyShape{4, weight, 1, true, true});
}

void count_points(benchmark::State& state, Backend backend)
{
  auto f = wide_family(static_cast<int>(state.range(0)), state.range(1));
  Rng rng(7);
  Vec xi = random_general_xi(rng, f.group().n);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_hull_points(f, xi, backend));
  state.counters["box"] = static_cast<double>(hull_lattice_box(f, xi).size());
}

void BM_CountSerial(benchmark::State& state) { count_points(state, Backend::serial); }
void BM_CountParallel(benchmark::State& state) { count_points(state, Backend::parallel); }

void BM_SumTerms(benchmark::State& state)
{
  auto backend = state.range(0) ? Backend::parallel : Backend::serial;
  auto term = [](std::uint64_t i) -> Q { return Q(1) / Q(static_cast<long>(i) + 1); };
  for (auto _ : state)
    benchmark::DoNotOptimize(sum_terms(2000, term, backend));
}

void BM_WeightLimit(benchmark::State& state)
{
  auto f = wide_family(static_cast<int>(state.range(0)), 3);
  Rng rng(9);
  Vec xi = random_general_xi(rng, f.group().n);
  for (auto _ : state)
    benchmark::DoNotOptimize(w_weight(f, xi, Method::limit));
}

}  // namespace

BENCHMARK(BM_CountSerial)->Args({3, 6})->Args({4, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Args({3, 6})->Args({4, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SumTerms)->Arg(0)->Arg(1);
BENCHMARK(BM_WeightLimit)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
