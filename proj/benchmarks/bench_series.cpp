#include <benchmark/benchmark.h>

#include "impactzeta/genfun.hpp"
#include "impactzeta/orders.hpp"

using namespace impactzeta;

static void BM_FullZeta(benchmark::State& state) {
  const auto c = orders::ExtensionCase::make(orders::CaseTag::Split);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orders::full_zeta(c, n).numerator.terms().size());
}
BENCHMARK(BM_FullZeta)->RangeMultiplier(2)->Range(1, 32);

static void BM_SeriesExpand(benchmark::State& state) {
  const RationalFn f = genfun::basin_genfun(BasinKind::Split, 6);
  const auto d = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_expand(f, d).coeffs.size());
}
BENCHMARK(BM_SeriesExpand)->RangeMultiplier(4)->Range(8, 512);

static void BM_SeriesAtQ(benchmark::State& state) {
  const RationalFn f = genfun::basin_genfun(BasinKind::Unramified, 8).eval_at_q(7);
  const auto d = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_expand(f, d).coeffs.size());
}
BENCHMARK(BM_SeriesAtQ)->RangeMultiplier(4)->Range(8, 512);

static void BM_ExactDivision(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const BiPoly a = BiPoly::one_minus_x(k) * (BiPoly::constant(1) + BiPoly::q_var().shift_x(3)).pow(4);
  const BiPoly b = BiPoly::one_minus_x(1);
  for (auto _ : state) benchmark::DoNotOptimize(poly_exact_div(a, b).terms().size());
}
BENCHMARK(BM_ExactDivision)->RangeMultiplier(4)->Range(4, 256);

static void BM_MainTheorem(benchmark::State& state) {
  for (auto _ : state)
    for (auto tag : {orders::CaseTag::Ramified, orders::CaseTag::Unramified, orders::CaseTag::Split})
      benchmark::DoNotOptimize(orders::check_main_theorem(orders::ExtensionCase::make(tag), 8).all_pass());
}
BENCHMARK(BM_MainTheorem)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
