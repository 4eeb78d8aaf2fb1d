#include <benchmark/benchmark.h>

#include "trisat/altmethod.hpp"
#include "trisat/cycle_type.hpp"
#include "trisat/generation.hpp"
#include "trisat/schreier_sims.hpp"
#include "trisat/tables.hpp"
#include "trisat/weil.hpp"

using namespace trisat;

static void BM_EnumerateClass(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto type = CycleType::parse("3^3", m);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_class(m, type));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(type.class_size()));
}
BENCHMARK(BM_EnumerateClass)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_GroupOrderSym(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<int> cycle(static_cast<std::size_t>(m));
  std::iota(cycle.begin(), cycle.end(), 0);
  const std::vector<Permutation> gens{Permutation::from_cycles(m, {{0, 1}}), Permutation::from_cycles(m, {cycle})};
  for (auto _ : state) benchmark::DoNotOptimize(group_order(gens));
}
BENCHMARK(BM_GroupOrderSym)->Arg(8)->Arg(12)->Arg(20);

static void BM_GenerationSearch(benchmark::State& state) {
  const auto& row = alt_generating_rows()[static_cast<std::size_t>(state.range(0))];
  const Triple t(row.triple[0], row.triple[1], row.triple[2]);
  GenerationSearchOptions opt;
  opt.shape_hint = alt_shape_hint(row.m, t);
  for (auto _ : state) benchmark::DoNotOptimize(find_generating_triple(row.m, t, opt));
  state.SetLabel("Alt_" + std::to_string(row.m) + " " + t.str());
}
BENCHMARK(BM_GenerationSearch)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveNonGeneration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prove_non_generation(9, Triple(3, 3, 4)));
}
BENCHMARK(BM_ExhaustiveNonGeneration)->Unit(benchmark::kMillisecond);

static void BM_H1Sweep(benchmark::State& state) {
  const int max_rank = static_cast<int>(state.range(0));
  for (auto _ : state) {
    int total = 0;
    for (int r = 1; r <= max_rank; ++r)
      for (int c = 7; c <= 60; ++c) total += h1_principal(DynkinType(Family::A, r), Triple(2, 3, c)).h1;
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_H1Sweep)->Arg(30)->Arg(200);

static void BM_ReproduceTable(benchmark::State& state) {
  const auto id = all_fixture_ids()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(reproduce_table(id));
  state.SetLabel(std::string(to_string(id)));
}
BENCHMARK(BM_ReproduceTable)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
