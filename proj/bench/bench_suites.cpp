// SPDX-License-Identifier: MIT
// Serial reference path against the OpenMP path for the verification suites.
// ORBITCALC_THREADS caps the parallel worker count.

#include <orbitcalc/enumerate.hpp>
#include <orbitcalc/verify.hpp>

#include <benchmark/benchmark.h>

namespace {

void run (benchmark::State &state, const char *suite, bool parallel)
{
  int max = static_cast<int>(state.range(0));
  std::size_t checked = 0;
  for (auto _: state)
  {
    orbitcalc::SuiteReport r = orbitcalc::run_suite(suite, max, parallel);
    checked = r.checked;
    benchmark::DoNotOptimize(r.failures.data());
  }
  state.counters["cases"] = static_cast<double>(checked);
  state.counters["threads"] = parallel ? orbitcalc::thread_count() : 1;
}

void BM_InduceOracle (benchmark::State &s, bool parallel) { run(s, "induce-oracle", parallel); }
void BM_LemmaPm (benchmark::State &s, bool parallel) { run(s, "lemma-pm", parallel); }
void BM_Reversal (benchmark::State &s, bool parallel) { run(s, "reversal", parallel); }
void BM_Domino (benchmark::State &s, bool parallel) { run(s, "domino-oracle", parallel); }

void BM_Enumerate (benchmark::State &state)
{
  int n = static_cast<int>(state.range(0));
  for (auto _: state)
  {
    std::size_t count = 0;
    orbitcalc::for_each_diagram(orbitcalc::Kind::Symplectic, n,
                                [&](const orbitcalc::SignedDiagram &) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}

} // namespace

BENCHMARK_CAPTURE(BM_InduceOracle, serial, false)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_InduceOracle, parallel, true)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LemmaPm, serial, false)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LemmaPm, parallel, true)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Reversal, serial, false)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Reversal, parallel, true)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Domino, serial, false)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Domino, parallel, true)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
