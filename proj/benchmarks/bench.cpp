#include <benchmark/benchmark.h>

#include "parityforge/ancient.hpp"
#include "parityforge/engine/engine.hpp"
#include "parityforge/proof/checker.hpp"
#include "parityforge/valuation.hpp"

namespace {

using namespace parityforge;

void BM_Decompose(benchmark::State& state) {
  Natural n = pow2(static_cast<unsigned>(state.range(0))) * 1234567891;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(n));
  }
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(64)->Arg(1024);

void BM_SqrtVerdict(benchmark::State& state) {
  const Natural n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine::sqrt_verdict(n));
  }
}
BENCHMARK(BM_SqrtVerdict)->Arg(2)->Arg(12)->Arg(45)->Arg(999983);

void BM_CbrtVerdict(benchmark::State& state) {
  const Natural n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine::cbrt_verdict(n));
  }
}
BENCHMARK(BM_CbrtVerdict)->Arg(24)->Arg(216);

void BM_CheckClassicalTrace(benchmark::State& state) {
  proof::ProofTrace t = engine::classical_sqrt2_trace(
      static_cast<engine::ClassicalVariant>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(proof::check_trace(t));
  }
}
BENCHMARK(BM_CheckClassicalTrace)->Arg(0)->Arg(1)->Arg(2)->Arg(3);

void BM_EgyptianMultiply(benchmark::State& state) {
  Natural a = pow2(static_cast<unsigned>(state.range(0))) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(egyptian_multiply(a, a));
  }
}
BENCHMARK(BM_EgyptianMultiply)->Arg(16)->Arg(256);

void BM_PerfectNumbers(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(perfect_numbers(static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_PerfectNumbers)->Arg(13)->Arg(19);

}  // namespace

BENCHMARK_MAIN();
