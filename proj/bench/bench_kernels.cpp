// Serial reference vs OpenMP kernels on the exhaustive verification suites.

#include <benchmark/benchmark.h>

#include "skyline/verify.hpp"

using skyline::Execution;

namespace {

  template <class F>
  void run(benchmark::State& state, F suite) {
    auto const ex = state.range(0) == 0 ? Execution::serial : Execution::parallel;
    for (auto _ : state) {
      auto r = suite(ex);
      benchmark::DoNotOptimize(r);
      if (!r.ok) {
        state.SkipWithError(r.counterexample.c_str());
        break;
      }
    }
    state.SetLabel(ex == Execution::serial ? "serial" : "parallel");
  }

  void BM_schur(benchmark::State& s) {
    run(s, [](Execution ex) { return skyline::verify_schur(6, ex); });
  }
  void BM_rsk_roundtrip(benchmark::State& s) {
    run(s, [](Execution ex) { return skyline::verify_rsk_roundtrip(4, 3, ex); });
  }
  void BM_psi(benchmark::State& s) {
    run(s, [](Execution ex) { return skyline::verify_psi(5, 5, ex); });
  }
  void BM_lemmas(benchmark::State& s) {
    run(s, [](Execution ex) { return skyline::verify_lemmas(5, 5, ex); });
  }

}  // namespace

BENCHMARK(BM_schur)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rsk_roundtrip)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_psi)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lemmas)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
