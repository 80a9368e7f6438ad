// Serial reference vs OpenMP kernels. The second argument selects the mode
// (0 = serial, 1 = parallel); the first is the word-length bound.

#include <benchmark/benchmark.h>

#include "freebound/eq_explorer.hpp"
#include "freebound/growth.hpp"
#include "freebound/kernels.hpp"

using namespace freebound;

namespace {

const Endomorphism& phi_ex() {
  static const Endomorphism m = parse_endomorphism("a->aa; b->aabbAA");
  return m;
}

const Endomorphism& theta() {
  static const Endomorphism m = parse_endomorphism("a->aa; b->bb");
  return m;
}

void BM_MaxCancellation(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::max_cancellation(phi_ex(), len, state.range(1)));
}
BENCHMARK(BM_MaxCancellation)->ArgsProduct({{7, 9}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_LengthViolations(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::length_violations(phi_ex(), len, true, state.range(1)));
  }
}
BENCHMARK(BM_LengthViolations)->ArgsProduct({{10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_EqualizerWords(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::equalizer_words(theta(), phi_ex(), len, state.range(1)));
  }
}
BENCHMARK(BM_EqualizerWords)->ArgsProduct({{10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_LkMismatches(benchmark::State& state) {
  const auto lift = psi_lift(phi_ex()).lift;
  const auto L = build_Lk(lift, 2);
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lk_mismatches(lift, L, 2, len, state.range(1)));
}
BENCHMARK(BM_LkMismatches)->ArgsProduct({{6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Explore(benchmark::State& state) {
  ExploreOptions o;
  o.depth = static_cast<std::size_t>(state.range(0));
  o.parallel = state.range(1) != 0;
  const auto psi = parse_endomorphism("a->aa; b->bbb");
  for (auto _ : state) benchmark::DoNotOptimize(explore(theta(), psi, o));
}
BENCHMARK(BM_Explore)->ArgsProduct({{8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
