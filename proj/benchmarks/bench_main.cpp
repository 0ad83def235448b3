#include <benchmark/benchmark.h>

#include <random>

#include "milnorforge/catalog.hpp"
#include "milnorforge/covers.hpp"
#include "milnorforge/integer_matrix.hpp"
#include "milnorforge/lattice.hpp"
#include "milnorforge/multinet.hpp"

using namespace milnorforge;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> entry(-20, 20);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

static void BM_Rank2Flats(benchmark::State& state) {
  const Arrangement a = catalog("monomial(3)");
  for (auto _ : state) benchmark::DoNotOptimize(rank2_flats(a));
}
BENCHMARK(BM_Rank2Flats);

static void BM_MultinetSearchB3(benchmark::State& state) {
  const Arrangement a = catalog("B3");
  MultinetSearchOptions o;
  o.k_min = o.k_max = 3;
  o.max_mult = 2;
  for (auto _ : state) benchmark::DoNotOptimize(search_multinets(a, o));
}
BENCHMARK(BM_MultinetSearchB3)->Unit(benchmark::kMillisecond);

static void BM_H1IntegralDeletedB3(benchmark::State& state) {
  const CyclicCover c =
      milnor_cover(MultiArrangement(catalog("deletedB3"), {2, 1, 3, 3, 2, 2, 1, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(h1_integral(c));
}
BENCHMARK(BM_H1IntegralDeletedB3)->Unit(benchmark::kMillisecond);

static void BM_MilnorReportDeletedB3(benchmark::State& state) {
  const MultiArrangement ma(catalog("deletedB3"), {2, 1, 3, 3, 2, 2, 1, 1});
  ScanOptions o;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(milnor_report(ma, {2}, o));
}
BENCHMARK(BM_MilnorReportDeletedB3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
