#include "vekua/siren.hpp"

#include <chrono>
#include <cmath>

#include <fmt/format.h>

#include "vekua/errors.hpp"
#include "vekua/random.hpp"

namespace vekua {
namespace {

struct ForwardCache {
  // inputs[i] feeds layer i; inputs[0] is X.
  std::vector<Eigen::MatrixXd> inputs;
  // d h_i / d pre_i for each hidden layer.
  std::vector<Eigen::MatrixXd> slopes;
};

Eigen::VectorXd forward(const SirenNetwork& net, const SirenConfig& config,
                        const Eigen::MatrixXd& x, ForwardCache* cache) {
  const std::size_t n_layers = net.layers.size();
  Eigen::MatrixXd h = x;
  for (std::size_t i = 0; i + 1 < n_layers; ++i) {
    const SirenLayer& layer = net.layers[i];
    Eigen::MatrixXd pre = h * layer.weight;
    pre.rowwise() += layer.bias;

    const double scale = (i == 0) ? config.omega0 : 1.0;
    Eigen::MatrixXd activated(pre.rows(), pre.cols());
    Eigen::MatrixXd slope;
    if (cache) {
      slope.resize(pre.rows(), pre.cols());
    }
    for (Eigen::Index j = 0; j < pre.size(); ++j) {
      const double arg = scale * pre.data()[j];
      activated.data()[j] = std::sin(arg);
      if (cache) {
        slope.data()[j] = scale * std::cos(arg);
      }
    }
    if (cache) {
      cache->inputs.push_back(std::move(h));
      cache->slopes.push_back(std::move(slope));
    }
    h = std::move(activated);
  }

  const SirenLayer& last = net.layers.back();
  Eigen::MatrixXd out = h * last.weight;
  out.rowwise() += last.bias;
  if (cache) {
    cache->inputs.push_back(std::move(h));
  }
  return out.col(0);
}

SirenGradient zeros_like(const std::vector<SirenLayer>& layers) {
  SirenGradient g;
  for (const SirenLayer& layer : layers) {
    g.weight.push_back(Eigen::MatrixXd::Zero(layer.weight.rows(), layer.weight.cols()));
    g.bias.push_back(Eigen::RowVectorXd::Zero(layer.bias.size()));
  }
  return g;
}

}  // namespace

void SirenConfig::validate() const {
  if (layer_sizes.size() < 2) {
    throw ConfigError("siren: need at least an input and an output layer");
  }
  if (layer_sizes.front() != 2 || layer_sizes.back() != 1) {
    throw ConfigError("siren: network must map 2 inputs to 1 output");
  }
  for (int width : layer_sizes) {
    if (width <= 0) {
      throw ConfigError("siren: layer widths must be positive");
    }
  }
  if (steps < 0) {
    throw ConfigError("siren: steps must be >= 0");
  }
}

SirenNetwork siren_init(const SirenConfig& config) {
  config.validate();
  Random rng(config.seed);
  SirenNetwork net;
  for (std::size_t i = 0; i + 1 < config.layer_sizes.size(); ++i) {
    const int n_in = config.layer_sizes[i];
    const int n_out = config.layer_sizes[i + 1];
    const double limit = (i == 0) ? 1.0 / n_in : std::sqrt(6.0 / n_in);
    SirenLayer layer{Eigen::MatrixXd(n_in, n_out), Eigen::RowVectorXd::Zero(n_out)};
    for (int r = 0; r < n_in; ++r) {
      for (int c = 0; c < n_out; ++c) {
        layer.weight(r, c) = rng.uniform(-limit, limit);
      }
    }
    net.layers.push_back(std::move(layer));
  }
  net.adam_m = zeros_like(net.layers);
  net.adam_v = zeros_like(net.layers);
  return net;
}

Eigen::MatrixXd to_input_matrix(const SamplePoints& pts) {
  if (pts.x.size() != pts.y.size()) {
    throw DomainError("siren: x and y sample arrays differ in length");
  }
  Eigen::MatrixXd x(static_cast<Eigen::Index>(pts.size()), 2);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    x(static_cast<Eigen::Index>(i), 0) = pts.x[i];
    x(static_cast<Eigen::Index>(i), 1) = pts.y[i];
  }
  return x;
}

Eigen::VectorXd siren_forward(const SirenNetwork& net, const SirenConfig& config,
                              const Eigen::MatrixXd& inputs) {
  return forward(net, config, inputs, nullptr);
}

LossAndGradient siren_loss_and_gradient(const SirenNetwork& net, const SirenConfig& config,
                                        const Eigen::MatrixXd& inputs,
                                        const Eigen::VectorXd& targets) {
  ForwardCache cache;
  const Eigen::VectorXd residual = forward(net, config, inputs, &cache) - targets;
  const double m = static_cast<double>(inputs.rows());

  LossAndGradient result;
  result.loss = residual.squaredNorm() / m;
  result.gradient = zeros_like(net.layers);

  // d loss / d output
  Eigen::MatrixXd delta = (2.0 / m) * residual;
  for (std::size_t i = net.layers.size(); i-- > 0;) {
    if (i + 1 < net.layers.size()) {
      delta.array() *= cache.slopes[i].array();
    }
    result.gradient.weight[i].noalias() = cache.inputs[i].transpose() * delta;
    result.gradient.bias[i] = delta.colwise().sum();
    if (i > 0) {
      delta = delta * net.layers[i].weight.transpose();
    }
  }
  return result;
}

void adam_step(SirenNetwork& net, const SirenConfig& config, const SirenGradient& gradient) {
  ++net.step_count;
  const double t = static_cast<double>(net.step_count);
  const double correction1 = 1.0 - std::pow(config.beta1, t);
  const double correction2 = 1.0 - std::pow(config.beta2, t);

  auto update = [&](auto& param, auto& m, auto& v, const auto& g) {
    m = config.beta1 * m + (1.0 - config.beta1) * g;
    v = config.beta2 * v + (1.0 - config.beta2) * g.cwiseAbs2();
    param.array() -= config.learning_rate * (m.array() / correction1) /
                     ((v.array() / correction2).sqrt() + config.epsilon);
  };
  for (std::size_t i = 0; i < net.layers.size(); ++i) {
    update(net.layers[i].weight, net.adam_m.weight[i], net.adam_v.weight[i], gradient.weight[i]);
    update(net.layers[i].bias, net.adam_m.bias[i], net.adam_v.bias[i], gradient.bias[i]);
  }
}

SirenTrainResult siren_train(SirenNetwork net, const SirenConfig& config, const SamplePoints& pts,
                             const std::vector<double>& u) {
  config.validate();
  if (u.size() != pts.size()) {
    throw DomainError(fmt::format("siren: {} targets for {} sample points", u.size(), pts.size()));
  }
  const Eigen::MatrixXd inputs = to_input_matrix(pts);
  const Eigen::VectorXd targets =
      Eigen::Map<const Eigen::VectorXd>(u.data(), static_cast<Eigen::Index>(u.size()));

  SirenTrainResult result;
  result.loss_history.reserve(static_cast<std::size_t>(config.steps));
  const auto start = std::chrono::steady_clock::now();
  for (int step = 0; step < config.steps; ++step) {
    const LossAndGradient lg = siren_loss_and_gradient(net, config, inputs, targets);
    if (!std::isfinite(lg.loss)) {
      throw TrainingError(fmt::format("siren: non-finite loss at step {}", step),
                          static_cast<std::size_t>(step));
    }
    result.loss_history.push_back(lg.loss);
    adam_step(net, config, lg.gradient);
  }
  const auto stop = std::chrono::steady_clock::now();

  result.network = std::move(net);
  result.train_seconds = std::chrono::duration<double>(stop - start).count();
  return result;
}

std::vector<double> siren_predict(const SirenNetwork& net, const SirenConfig& config,
                                  const SamplePoints& pts) {
  const Eigen::VectorXd out = siren_forward(net, config, to_input_matrix(pts));
  return {out.data(), out.data() + out.size()};
}

}  // namespace vekua
