#include <benchmark/benchmark.h>

#include "impactzeta/genfun.hpp"

using namespace impactzeta;

static void BM_BuildTree(benchmark::State& state, BasinKind kind) {
  const BuildingSpec spec(kind, 3);
  const auto r = static_cast<unsigned>(state.range(0));
  std::size_t size = 0;
  for (auto _ : state) {
    auto t = build_truncated(spec, r, r);
    size = t.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["vertices"] = static_cast<double>(size);
}
BENCHMARK_CAPTURE(BM_BuildTree, unramified, BasinKind::Unramified)->DenseRange(4, 10, 2);
BENCHMARK_CAPTURE(BM_BuildTree, split, BasinKind::Split)->DenseRange(2, 6, 2);

static void BM_CountTable(benchmark::State& state) {
  const BuildingSpec spec(BasinKind::Split, 3);
  const auto n = static_cast<unsigned>(state.range(0));
  auto tree = genfun::oracle_tree(spec, n, 12);
  const VertexAddr v = way_out_vertex(spec, n);
  for (auto _ : state) benchmark::DoNotOptimize(genfun::count_table_oracle(tree, v, 12).r.size());
}
BENCHMARK(BM_CountTable)->DenseRange(1, 5);

static void BM_OracleCheck(benchmark::State& state) {
  const BuildingSpec spec(BasinKind::Ramified, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(genfun::check_oracle(spec, 5, 12).all_pass());
}
BENCHMARK(BM_OracleCheck)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
