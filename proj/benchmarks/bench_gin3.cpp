#include <benchmark/benchmark.h>

#include "gin3/buchberger.hpp"
#include "gin3/gin.hpp"
#include "gin3/lefschetz.hpp"
#include "gin3/oracle.hpp"

using namespace gin3;

namespace {

void BM_hilbert_series(benchmark::State& state) {
  const DegreeTriple t(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)),
                       static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ci_hilbert_series(t));
}
BENCHMARK(BM_hilbert_series)->Arg(5)->Arg(10)->Arg(20);

void BM_greedy_construction(benchmark::State& state) {
  const DegreeTriple t(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)),
                       static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(construct_gin_greedy(t));
}
BENCHMARK(BM_greedy_construction)->Arg(4)->Arg(8)->Arg(12);

void BM_closed_form(benchmark::State& state) {
  const DegreeTriple t(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)),
                       static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(construct_gin_closed_form(t));
}
BENCHMARK(BM_closed_form)->Arg(4)->Arg(8)->Arg(12);

void BM_strong_lefschetz(benchmark::State& state) {
  const DegreeTriple t(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)),
                       static_cast<int>(state.range(0)));
  const MonomialIdeal J = construct_gin_greedy(t).ideal;
  for (auto _ : state) benchmark::DoNotOptimize(is_strong_lefschetz_x3(J));
}
BENCHMARK(BM_strong_lefschetz)->Arg(4)->Arg(8);

void BM_oracle_run(benchmark::State& state) {
  const DegreeTriple t(2, 2, static_cast<int>(state.range(0)));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_compare(t, seed++));
}
BENCHMARK(BM_oracle_run)->Arg(2)->Arg(4)->Arg(6);

void BM_almost_revlex_check(benchmark::State& state) {
  const DegreeTriple t(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)),
                       static_cast<int>(state.range(0)));
  const MonomialIdeal J = construct_gin_greedy(t).ideal;
  for (auto _ : state) benchmark::DoNotOptimize(is_almost_revlex(J));
}
BENCHMARK(BM_almost_revlex_check)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
