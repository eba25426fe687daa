#include <benchmark/benchmark.h>

#include "impactzeta/ideals.hpp"

using namespace impactzeta;
using namespace impactzeta::padic;

static void BM_EnumerateIdeals(benchmark::State& state, CaseTag tag, unsigned p) {
  const unsigned n = 2;
  const auto D = static_cast<unsigned>(state.range(0));
  auto inst = CaseInstance::make(tag, p, default_precision(n, D));
  std::size_t count = 0;
  for (auto _ : state) {
    auto recs = enumerate_ideals(inst, n, D);
    count = recs.size();
    benchmark::DoNotOptimize(recs.data());
  }
  state.counters["ideals"] = static_cast<double>(count);
}
BENCHMARK_CAPTURE(BM_EnumerateIdeals, ramified_p3, CaseTag::Ramified, 3u)->DenseRange(2, 6, 2);
BENCHMARK_CAPTURE(BM_EnumerateIdeals, unramified_p5, CaseTag::Unramified, 5u)->DenseRange(2, 6, 2);
BENCHMARK_CAPTURE(BM_EnumerateIdeals, split_p3, CaseTag::Split, 3u)->DenseRange(2, 6, 2);

static void BM_EnumerateThreads(benchmark::State& state) {
  auto inst = CaseInstance::make(CaseTag::Split, 5, default_precision(2, 6));
  EnumerationOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(inst, 2, 6, opts).size());
}
BENCHMARK(BM_EnumerateThreads)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

static void BM_FindGenerator(benchmark::State& state) {
  auto inst = CaseInstance::make(CaseTag::Unramified, 5, 16);
  const LatticeHNF ideal{1, 3, 2};
  for (auto _ : state) benchmark::DoNotOptimize(find_generator(inst, 2, ideal));
}
BENCHMARK(BM_FindGenerator);

BENCHMARK_MAIN();
