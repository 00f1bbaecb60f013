#include <benchmark/benchmark.h>

#include "vekua/experiments.hpp"

namespace {

// Basis assembly plus TSVD solve on each experiment's training set.
void BM_Fit(benchmark::State& state) {
  const auto id = static_cast<vekua::ExperimentId>(state.range(0));
  const vekua::ExperimentConfig config = vekua::default_config(id);
  const vekua::Dataset data = vekua::build_dataset(config, 42);
  const vekua::TruncationPolicy policy(config.rcond);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vekua::fit(config.basis, data.train, data.train_values, policy));
  }
  state.SetLabel(std::string(vekua::display_name(id)));
}
BENCHMARK(BM_Fit)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_Predict(benchmark::State& state) {
  const vekua::ExperimentConfig config = vekua::default_config(vekua::ExperimentId::D);
  const vekua::Dataset data = vekua::build_dataset(config, 42);
  const vekua::FittedModel model =
      vekua::fit(config.basis, data.train, data.train_values, vekua::TruncationPolicy(config.rcond));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vekua::predict(model, data.test));
  }
}
BENCHMARK(BM_Predict)->Unit(benchmark::kMicrosecond);

}  // namespace
