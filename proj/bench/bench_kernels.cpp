#include <benchmark/benchmark.h>

#include "sdim/constructions.hpp"
#include "sdim/dimension.hpp"
#include "sdim/distances.hpp"
#include "sdim/embedding.hpp"
#include "sdim/generators.hpp"
#include "sdim/threshold.hpp"

using namespace sdim;

static void BM_apsp_serial(benchmark::State& st) {
  Graph g = random_connected(static_cast<int>(st.range(0)), 0.05, 1);
  for (auto _ : st) benchmark::DoNotOptimize(serial::all_pairs_distances(g));
}
BENCHMARK(BM_apsp_serial)->Arg(200)->Arg(800);

static void BM_apsp_parallel(benchmark::State& st) {
  Graph g = random_connected(static_cast<int>(st.range(0)), 0.05, 1);
  for (auto _ : st) benchmark::DoNotOptimize(all_pairs_distances(g));
}
BENCHMARK(BM_apsp_parallel)->Arg(200)->Arg(800);

static void BM_strong_dimension_reduction(benchmark::State& st) {
  Graph g = random_connected(static_cast<int>(st.range(0)), 0.3, 2);
  for (auto _ : st) benchmark::DoNotOptimize(strong_dimension(g));
}
BENCHMARK(BM_strong_dimension_reduction)->Arg(14)->Arg(40);

static void BM_strong_dimension_brute(benchmark::State& st) {
  Graph g = random_connected(static_cast<int>(st.range(0)), 0.3, 2);
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_dimension(g, DimensionMode::strong));
}
BENCHMARK(BM_strong_dimension_brute)->Arg(14);

static void BM_isometry_serial(benchmark::State& st) {
  auto eg = l3n_family(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::is_isometric_in_product(eg.embedding));
}
BENCHMARK(BM_isometry_serial)->Arg(8)->Arg(30);

static void BM_isometry_parallel(benchmark::State& st) {
  auto eg = l3n_family(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(is_isometric_in_product(eg.embedding));
}
BENCHMARK(BM_isometry_parallel)->Arg(8)->Arg(30);

static void BM_threshold_gadget(benchmark::State& st) {
  Graph g = gn_family(1);
  ThresholdOptions opt;
  opt.max_k = 3;
  opt.search.jobs = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(threshold_dimension(g, ThresholdKind::strong, opt));
}
BENCHMARK(BM_threshold_gadget)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_threshold_cycle(benchmark::State& st) {
  Graph g = cycle_graph(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(threshold_dimension(g, ThresholdKind::strong));
}
BENCHMARK(BM_threshold_cycle)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
