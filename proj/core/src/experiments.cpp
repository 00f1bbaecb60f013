#include "vekua/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <thread>

#include "vekua/errors.hpp"
#include "vekua/random.hpp"
#include "vekua/special_functions.hpp"

namespace vekua {

char to_char(ExperimentId id) { return static_cast<char>('A' + static_cast<int>(id)); }

std::optional<ExperimentId> parse_experiment_id(std::string_view text) {
  if (text.size() != 1) {
    return std::nullopt;
  }
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (c < 'A' || c > 'D') {
    return std::nullopt;
  }
  return static_cast<ExperimentId>(c - 'A');
}

std::string_view display_name(ExperimentId id) {
  switch (id) {
    case ExperimentId::A: return "A: Helmholtz";
    case ExperimentId::B: return "B: Holography";
    case ExperimentId::C: return "C: Robustness";
    case ExperimentId::D: return "D: Chaos";
  }
  return "?";
}

std::string_view to_string(Method method) { return method == Method::Vekua ? "Vekua" : "SIREN"; }

ExperimentConfig default_config(ExperimentId id) {
  ExperimentConfig c;
  c.id = id;
  switch (id) {
    case ExperimentId::A:
      c.wavenumber = 20.0;
      c.basis = BasisSpec::helmholtz(5, c.wavenumber);
      c.train_points = 200;
      c.test_points = 100;
      break;
    case ExperimentId::B:
      c.basis = BasisSpec::laplace(2);
      c.train_points = 100;
      c.test_points = 100;
      c.plot_rows = 50;
      break;
    case ExperimentId::C:
      c.wavenumber = 15.0;
      c.basis = BasisSpec::helmholtz(8, c.wavenumber);
      c.train_points = 300;
      c.test_points = 100;
      c.noise_sigma = 0.2;
      c.rcond = 1e-2;
      break;
    case ExperimentId::D:
      c.wavenumber = 10.0;
      c.basis = BasisSpec::helmholtz(15, c.wavenumber);
      c.train_points = 500;
      c.test_points = 200;
      c.chaotic_modes = 30;
      c.siren.steps = 4000;
      break;
  }
  return c;
}

std::vector<double> linspace(double start, double stop, int count) {
  std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
  if (count == 1) {
    out[0] = start;
  } else if (count > 1) {
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) {
      out[i] = i * step + start;
    }
    out.back() = stop;
  }
  return out;
}

std::vector<double> target_helmholtz_monopole(double wavenumber, const SamplePoints& pts) {
  std::vector<double> u(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    u[i] = bessel_j(0, wavenumber * cartesian_to_polar(pts.x[i], pts.y[i]).r);
  }
  return u;
}

std::vector<double> target_saddle(const SamplePoints& pts) {
  std::vector<double> u(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    u[i] = pts.x[i] * pts.x[i] - pts.y[i] * pts.y[i];
  }
  return u;
}

ChaoticField ChaoticField::from_seed(std::uint32_t seed, int n_modes) {
  Random rng(seed);
  ChaoticField field;
  field.coefficients.resize(static_cast<std::size_t>(n_modes));
  field.phases.resize(static_cast<std::size_t>(n_modes));
  for (double& c : field.coefficients) {
    c = rng.standard_normal();
  }
  for (double& p : field.phases) {
    p = rng.uniform() * 2.0 * std::numbers::pi;
  }
  return field;
}

std::vector<double> target_chaotic(double wavenumber, const ChaoticField& field,
                                   const SamplePoints& pts) {
  if (field.coefficients.size() != field.phases.size()) {
    throw ConfigError("chaotic field: coefficient and phase counts differ");
  }
  const int n_modes = static_cast<int>(field.coefficients.size());
  std::vector<double> u(pts.size(), 0.0);
  if (n_modes == 0) {
    return u;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const PolarPoint p = cartesian_to_polar(pts.x[i], pts.y[i]);
    const std::vector<double> radial = bessel_j_sequence(n_modes - 1, wavenumber * p.r);
    for (int n = 0; n < n_modes; ++n) {
      u[i] += field.coefficients[n] * radial[n] * std::cos(n * p.theta + field.phases[n]);
    }
  }
  return u;
}

std::vector<double> target_chaotic(double wavenumber, std::uint32_t seed,
                                   const SamplePoints& pts) {
  return target_chaotic(wavenumber, ChaoticField::from_seed(seed), pts);
}

std::vector<double> add_noise(const std::vector<double>& u, double sigma, std::uint32_t seed) {
  Random rng(seed);
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    out[i] = u[i] + rng.standard_normal() * sigma;
  }
  return out;
}

namespace {

SamplePoints unit_circle(int count) {
  SamplePoints pts;
  for (double theta : linspace(0.0, 2.0 * std::numbers::pi, count)) {
    pts.x.push_back(std::cos(theta));
    pts.y.push_back(std::sin(theta));
  }
  return pts;
}

SamplePoints chord(double half_width, int count) {
  SamplePoints pts;
  pts.x = linspace(-half_width, half_width, count);
  pts.y.assign(pts.x.size(), 0.0);
  return pts;
}

// Edge y = edge_y followed by edge x = edge_x, each sampled at `line`.
SamplePoints two_edges(const std::vector<double>& line, double edge_x, double edge_y) {
  SamplePoints pts;
  pts.x = line;
  pts.y.assign(line.size(), edge_y);
  pts.x.insert(pts.x.end(), line.size(), edge_x);
  pts.y.insert(pts.y.end(), line.begin(), line.end());
  return pts;
}

}  // namespace

Dataset build_dataset(const ExperimentConfig& config, std::uint32_t seed) {
  Dataset d;
  switch (config.id) {
    case ExperimentId::A:
    case ExperimentId::C:
      d.train = unit_circle(config.train_points);
      d.test = chord(config.test_half_width, config.test_points);
      d.train_values = target_helmholtz_monopole(config.wavenumber, d.train);
      d.test_values = target_helmholtz_monopole(config.wavenumber, d.test);
      break;
    case ExperimentId::B:
      d.train = two_edges(linspace(-1.0, 1.0, config.train_points), 1.0, 1.0);
      d.test = two_edges(linspace(-1.0, 1.0, config.test_points), -1.0, -1.0);
      d.train_values = target_saddle(d.train);
      d.test_values = target_saddle(d.test);
      break;
    case ExperimentId::D: {
      const ChaoticField field = ChaoticField::from_seed(seed, config.chaotic_modes);
      d.train = unit_circle(config.train_points);
      d.test = chord(config.test_half_width, config.test_points);
      d.train_values = target_chaotic(config.wavenumber, field, d.train);
      d.test_values = target_chaotic(config.wavenumber, field, d.test);
      break;
    }
  }
  if (config.noise_sigma > 0.0) {
    d.train_values = add_noise(d.train_values, config.noise_sigma, seed);
  }
  return d;
}

double mean_squared_error(const std::vector<double>& prediction, const std::vector<double>& truth) {
  if (prediction.size() != truth.size() || truth.empty()) {
    throw DomainError("mse: prediction and truth must be non-empty and equally long");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double e = prediction[i] - truth[i];
    sum += e * e;
  }
  return sum / static_cast<double>(truth.size());
}

SeedOutcome run_experiment(const ExperimentConfig& config, std::uint32_t seed,
                           const RunOptions& options) {
  SeedOutcome out;
  out.experiment = config.id;
  out.seed = seed;

  Dataset data;
  try {
    data = build_dataset(config, seed);
  } catch (const Error& e) {
    out.failures.push_back({config.id, seed, Method::Vekua, e.what()});
    if (options.run_siren) {
      out.failures.push_back({config.id, seed, Method::Siren, e.what()});
    }
    return out;
  }

  try {
    FittedModel model = fit(config.basis, data.train, data.train_values, TruncationPolicy(config.rcond));
    std::vector<double> prediction = predict(model, data.test);
    ExperimentResult r;
    r.experiment = config.id;
    r.method = Method::Vekua;
    r.seed = seed;
    r.mse = mean_squared_error(prediction, data.test_values);
    r.wall_seconds = model.fit_seconds;
    r.test_line = {data.test.x, data.test_values, std::move(prediction)};
    out.vekua = std::move(r);
    out.model = std::move(model);
  } catch (const Error& e) {
    out.failures.push_back({config.id, seed, Method::Vekua, e.what()});
  }

  if (config.noise_sigma > 0.0) {
    out.noisy_line = add_noise(data.test_values, config.noise_sigma, seed);
  }

  if (options.run_siren) {
    try {
      SirenConfig siren_config = config.siren;
      siren_config.seed = seed;
      SirenTrainResult trained =
          siren_train(siren_init(siren_config), siren_config, data.train, data.train_values);
      std::vector<double> prediction = siren_predict(trained.network, siren_config, data.test);
      ExperimentResult r;
      r.experiment = config.id;
      r.method = Method::Siren;
      r.seed = seed;
      r.mse = mean_squared_error(prediction, data.test_values);
      r.wall_seconds = trained.train_seconds;
      r.test_line = {data.test.x, data.test_values, std::move(prediction)};
      out.siren = std::move(r);
    } catch (const Error& e) {
      out.failures.push_back({config.id, seed, Method::Siren, e.what()});
    }
  }
  return out;
}

std::vector<SeedOutcome> run_benchmark(const std::vector<ExperimentConfig>& configs,
                                       const BenchmarkOptions& options) {
  struct Task {
    const ExperimentConfig* config;
    std::uint32_t seed;
  };
  std::vector<Task> tasks;
  for (const ExperimentConfig& config : configs) {
    for (std::uint32_t seed : config.seeds) {
      tasks.push_back({&config, seed});
    }
  }

  std::vector<SeedOutcome> outcomes(tasks.size());
  const RunOptions run_options{options.run_siren};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      outcomes[i] = run_experiment(*tasks[i].config, tasks[i].seed, run_options);
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
  }

  std::stable_sort(outcomes.begin(), outcomes.end(), [](const SeedOutcome& a, const SeedOutcome& b) {
    return a.experiment != b.experiment ? a.experiment < b.experiment : a.seed < b.seed;
  });
  return outcomes;
}

MeanStd mean_std(const std::vector<double>& values) {
  if (values.empty()) {
    return {};
  }
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  const double mean = sum / n;
  double sq = 0.0;
  for (double v : values) {
    sq += (v - mean) * (v - mean);
  }
  return {mean, std::sqrt(sq / n)};
}

std::vector<SummaryRow> aggregate(const std::vector<ExperimentResult>& results) {
  std::map<std::pair<ExperimentId, Method>, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const ExperimentResult& r : results) {
    auto& [seconds, mse] = groups[{r.experiment, r.method}];
    seconds.push_back(r.wall_seconds);
    mse.push_back(r.mse);
  }
  std::vector<SummaryRow> rows;
  for (const auto& [key, series] : groups) {
    rows.push_back({key.first, key.second, mean_std(series.first), mean_std(series.second),
                    series.first.size()});
  }
  return rows;
}

std::vector<ExperimentResult> collect_results(const std::vector<SeedOutcome>& outcomes) {
  std::vector<ExperimentResult> results;
  for (const SeedOutcome& o : outcomes) {
    if (o.vekua) {
      results.push_back(*o.vekua);
    }
    if (o.siren) {
      results.push_back(*o.siren);
    }
  }
  return results;
}

}  // namespace vekua
