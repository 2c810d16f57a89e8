// Serial reference against the OpenMP kernels of the axiom harness.

#include "dgop/pasc_operad.hpp"
#include "dgop/perm_operad.hpp"

#include <benchmark/benchmark.h>

using namespace dgop;

template <class Op>
static void BM_axioms(benchmark::State& state, Execution ex) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = check_operad_axioms(Op{}, n, ex);
    if (!rep.all_passed()) state.SkipWithError("axiom failure");
    benchmark::DoNotOptimize(rep);
  }
}

static void BM_pi(benchmark::State& s, Execution ex) { BM_axioms<PermOperad>(s, ex); }
static void BM_pasc(benchmark::State& s, Execution ex) { BM_axioms<PascOperad>(s, ex); }

BENCHMARK_CAPTURE(BM_pi, serial, Execution::serial)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_pi, parallel, Execution::parallel)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_pasc, serial, Execution::serial)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_pasc, parallel, Execution::parallel)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
