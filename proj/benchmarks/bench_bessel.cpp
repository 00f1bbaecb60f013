#include <benchmark/benchmark.h>

#include "vekua/special_functions.hpp"

namespace {

void BM_BesselScalar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vekua::bessel_j(n, x));
    x = x < 20.0 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_BesselScalar)->Arg(0)->Arg(5)->Arg(15)->Arg(30);

void BM_BesselSequence(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vekua::bessel_j_sequence(n_max, x));
    x = x < 20.0 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_BesselSequence)->Arg(5)->Arg(15)->Arg(30);

}  // namespace
