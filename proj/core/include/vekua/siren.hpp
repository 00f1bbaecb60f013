#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "vekua/trefftz_basis.hpp"

namespace vekua {

struct SirenConfig {
  std::vector<int> layer_sizes{2, 128, 128, 128, 1};
  double omega0 = 30.0;
  double learning_rate = 5e-4;
  int steps = 3000;
  std::uint32_t seed = 0;

  // Adam, no weight decay, bias-corrected moments.
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  /// Throws ConfigError unless the network maps 2 inputs to 1 output and every
  /// width is positive.
  void validate() const;
};

/// Weights are stored n_in x n_out so a layer computes h * W + b on row-batched
/// inputs.
struct SirenLayer {
  Eigen::MatrixXd weight;
  Eigen::RowVectorXd bias;
};

struct SirenGradient {
  std::vector<Eigen::MatrixXd> weight;
  std::vector<Eigen::RowVectorXd> bias;
};

struct SirenNetwork {
  std::vector<SirenLayer> layers;
  SirenGradient adam_m;
  SirenGradient adam_v;
  long step_count = 0;
};

/// First layer uniform in [-1/n_in, 1/n_in], deeper layers uniform in
/// [-sqrt(6/n_in), sqrt(6/n_in)], biases zero, Adam moments zero. Weights are
/// drawn layer by layer in row-major order from Random(config.seed).
SirenNetwork siren_init(const SirenConfig& config);

/// Stacks sample coordinates into an M x 2 matrix.
Eigen::MatrixXd to_input_matrix(const SamplePoints& pts);

/// h0 = sin(omega0 (X W0 + b0)), h_i = sin(h_{i-1} W_i + b_i), output affine.
Eigen::VectorXd siren_forward(const SirenNetwork& net, const SirenConfig& config,
                              const Eigen::MatrixXd& inputs);

struct LossAndGradient {
  double loss = 0.0;
  SirenGradient gradient;
};

/// mean((f(X) - u)^2) and its analytic gradient by backpropagation.
LossAndGradient siren_loss_and_gradient(const SirenNetwork& net, const SirenConfig& config,
                                        const Eigen::MatrixXd& inputs,
                                        const Eigen::VectorXd& targets);

/// One Adam update with the given gradient.
void adam_step(SirenNetwork& net, const SirenConfig& config, const SirenGradient& gradient);

struct SirenTrainResult {
  SirenNetwork network;
  double train_seconds = 0.0;
  /// Loss before each update, one entry per step.
  std::vector<double> loss_history;
};

/// Runs exactly config.steps full-batch Adam updates on the mean squared
/// error. train_seconds covers the whole loop. Throws TrainingError carrying
/// the step index if the loss becomes non-finite, and DomainError if pts and
/// u disagree in length.
SirenTrainResult siren_train(SirenNetwork net, const SirenConfig& config, const SamplePoints& pts,
                             const std::vector<double>& u);

std::vector<double> siren_predict(const SirenNetwork& net, const SirenConfig& config,
                                  const SamplePoints& pts);

}  // namespace vekua
