#include <benchmark/benchmark.h>

#include <numeric>

#include "ascurve/codes.hpp"
#include "ascurve/counting.hpp"
#include "ascurve/walsh.hpp"

using namespace ascurve;

static void BM_FieldMul(benchmark::State& state) {
  const auto F = make_field(static_cast<std::uint32_t>(state.range(0)),
                            static_cast<unsigned>(state.range(1)));
  Code acc = 1;
  const Code step = F->size() / 3 + 1;
  for (auto _ : state) {
    acc = F->mul(acc, step) + 1;
    if (acc >= F->size()) acc = 1;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Args({2, 16})->Args({2, 31})->Args({3, 10})->Args({7, 5});

static void BM_CountTraceZeros(benchmark::State& state) {
  const auto F = make_field(2, static_cast<unsigned>(state.range(0)));
  const auto f = parse_polynomial(*F, "x^7+3*x^3+x");
  for (auto _ : state) benchmark::DoNotOptimize(count_trace_zeros(*F, f));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * F->size()));
}
BENCHMARK(BM_CountTraceZeros)->Arg(10)->Arg(16);

static void BM_MinDistanceQuinticCode(benchmark::State& state) {
  const auto F = make_field(2, 7);
  std::vector<Code> points(F->size());
  std::iota(points.begin(), points.end(), Code{0});
  const std::vector<std::uint64_t> exps{1, 3, 5};
  const auto code = build_trace_code(*F, points, basis_monomials(*F, exps), true);
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_exhaustive(code));
}
BENCHMARK(BM_MinDistanceQuinticCode)->Unit(benchmark::kMillisecond);

static void BM_MinDistanceGoppaDual(benchmark::State& state) {
  const auto built = goppa_dual(5, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_exhaustive(built.code));
}
BENCHMARK(BM_MinDistanceGoppaDual)->Unit(benchmark::kMillisecond);

static void BM_WalshSpectrum(benchmark::State& state) {
  const auto F = make_field(2, static_cast<unsigned>(state.range(0)));
  const auto f = parse_polynomial(*F, "x^5+x^3");
  for (auto _ : state) benchmark::DoNotOptimize(walsh_spectrum(*F, f).max_abs);
}
BENCHMARK(BM_WalshSpectrum)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
