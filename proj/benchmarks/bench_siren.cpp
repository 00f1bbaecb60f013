#include <benchmark/benchmark.h>

#include "vekua/experiments.hpp"

namespace {

// One full-batch forward, backward and Adam update of the default network.
void BM_SirenStep(benchmark::State& state) {
  vekua::ExperimentConfig config = vekua::default_config(vekua::ExperimentId::A);
  config.train_points = static_cast<int>(state.range(0));
  const vekua::Dataset data = vekua::build_dataset(config, 42);
  vekua::SirenConfig siren = config.siren;
  siren.seed = 42;
  vekua::SirenNetwork net = vekua::siren_init(siren);
  const Eigen::MatrixXd inputs = vekua::to_input_matrix(data.train);
  const Eigen::VectorXd targets = Eigen::Map<const Eigen::VectorXd>(
      data.train_values.data(), static_cast<Eigen::Index>(data.train_values.size()));
  for (auto _ : state) {
    const vekua::LossAndGradient lg = vekua::siren_loss_and_gradient(net, siren, inputs, targets);
    vekua::adam_step(net, siren, lg.gradient);
    benchmark::DoNotOptimize(lg.loss);
  }
}
BENCHMARK(BM_SirenStep)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace
