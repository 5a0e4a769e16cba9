// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "diffseq/gapset.hpp"
#include "diffseq/primes.hpp"
#include "diffseq/solver.hpp"

namespace {

using namespace diffseq;

// f(P+3, 5; 2) = 42: the infeasibility proof at n = 42 is the largest
// search among the reference-table cells.
void BM_FeasibleSerial(benchmark::State& state) {
  const GapSet S = make_set("primes+3");
  for (auto _ : state) {
    auto r = feasible_serial(S, 5, 2, 42);
    benchmark::DoNotOptimize(r.nodes);
  }
}
BENCHMARK(BM_FeasibleSerial)->Unit(benchmark::kMillisecond);

void BM_FeasibleParallel(benchmark::State& state) {
  const GapSet S = make_set("primes+3");
  SolverOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = feasible(S, 5, 2, 42, {}, opts);
    benchmark::DoNotOptimize(r.nodes);
  }
}
BENCHMARK(BM_FeasibleParallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SieveSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sieve_serial(static_cast<std::uint64_t>(state.range(0))).size());
}
BENCHMARK(BM_SieveSerial)->Arg(20'000'000)->Unit(benchmark::kMillisecond);

void BM_SieveSegmented(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sieve(static_cast<std::uint64_t>(state.range(0))).size());
}
BENCHMARK(BM_SieveSegmented)->Arg(20'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
