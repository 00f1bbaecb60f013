#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vekua/siren.hpp"
#include "vekua/trefftz_basis.hpp"
#include "vekua/tsvd_solver.hpp"
#include "vekua/vekua_model.hpp"

namespace vekua {

enum class ExperimentId { A, B, C, D };
enum class Method { Vekua, Siren };

inline constexpr ExperimentId kAllExperiments[] = {ExperimentId::A, ExperimentId::B,
                                                   ExperimentId::C, ExperimentId::D};

char to_char(ExperimentId id);
/// "A" .. "D" (case-insensitive); std::nullopt otherwise.
std::optional<ExperimentId> parse_experiment_id(std::string_view text);
/// "A: Helmholtz", "B: Holography", "C: Robustness", "D: Chaos".
std::string_view display_name(ExperimentId id);
std::string_view to_string(Method method);

/// Task definition. default_config() reproduces the reference benchmark:
///   A  Helmholtz k=20, N=5, 200 unit-circle samples, rcond 1e-14
///   B  Laplace N=2, 100 + 100 samples on the y=1 and x=1 edges of [-1,1]^2,
///      scored on the y=-1 and x=-1 edges, rcond 1e-14
///   C  Helmholtz k=15, N=8, 300 unit-circle samples with N(0, 0.2^2) noise,
///      rcond 1e-2
///   D  Helmholtz k=10, N=15, 30-mode random field, 500 samples, 200 test
///      points, SIREN 4000 steps
/// A, C and D are scored on y=0, x in [-0.9, 0.9].
struct ExperimentConfig {
  ExperimentId id = ExperimentId::A;
  std::vector<std::uint32_t> seeds{42, 43, 44};
  BasisSpec basis = BasisSpec::laplace(1);
  double rcond = 1e-14;
  double wavenumber = 0.0;  // target field wavenumber (A, C, D)
  int train_points = 0;     // circle samples, or samples per edge for B
  int test_points = 100;    // chord samples, or samples per edge for B
  double noise_sigma = 0.0;
  int chaotic_modes = 30;
  double test_half_width = 0.9;
  /// Rows of the test line exported for plotting; 0 exports all of them.
  int plot_rows = 0;
  SirenConfig siren;
};

ExperimentConfig default_config(ExperimentId id);

/// Evenly spaced values over [start, stop] with both endpoints, computed the
/// way numpy.linspace does.
std::vector<double> linspace(double start, double stop, int count);

/// J_0(k r).
std::vector<double> target_helmholtz_monopole(double wavenumber, const SamplePoints& pts);

/// x^2 - y^2.
std::vector<double> target_saddle(const SamplePoints& pts);

/// u(r, theta) = sum_n c_n J_n(k r) cos(n theta + phase_n).
struct ChaoticField {
  std::vector<double> coefficients;
  std::vector<double> phases;

  /// n_modes standard-normal coefficients, then n_modes phases uniform in
  /// [0, 2 pi), both from Random(seed).
  static ChaoticField from_seed(std::uint32_t seed, int n_modes = 30);
};

std::vector<double> target_chaotic(double wavenumber, const ChaoticField& field,
                                   const SamplePoints& pts);
std::vector<double> target_chaotic(double wavenumber, std::uint32_t seed, const SamplePoints& pts);

/// u + sigma * z with z standard normal from Random(seed).
std::vector<double> add_noise(const std::vector<double>& u, double sigma, std::uint32_t seed);

struct Dataset {
  SamplePoints train;
  std::vector<double> train_values;  // what the methods see (noisy for C)
  SamplePoints test;
  std::vector<double> test_values;   // clean truth
};

Dataset build_dataset(const ExperimentConfig& config, std::uint32_t seed);

struct TestLine {
  std::vector<double> x;
  std::vector<double> truth;
  std::vector<double> prediction;
};

struct ExperimentResult {
  ExperimentId experiment = ExperimentId::A;
  Method method = Method::Vekua;
  std::uint32_t seed = 0;
  double mse = 0.0;
  double wall_seconds = 0.0;
  TestLine test_line;
};

struct Failure {
  ExperimentId experiment = ExperimentId::A;
  std::uint32_t seed = 0;
  Method method = Method::Vekua;
  std::string message;
};

struct SeedOutcome {
  ExperimentId experiment = ExperimentId::A;
  std::uint32_t seed = 0;
  std::optional<ExperimentResult> vekua;
  std::optional<ExperimentResult> siren;
  /// Noisy samples along the test line for plotting (C only): truth plus the
  /// same seeded noise stream used for training.
  std::vector<double> noisy_line;
  /// Vekua model, kept so runs can persist it.
  std::optional<FittedModel> model;
  std::vector<Failure> failures;
};

struct RunOptions {
  bool run_siren = true;
};

double mean_squared_error(const std::vector<double>& prediction, const std::vector<double>& truth);

/// Fits Vekua (and trains SIREN unless disabled) on one seed. Errors raised
/// by either method are recorded in `failures`; the other method still runs.
SeedOutcome run_experiment(const ExperimentConfig& config, std::uint32_t seed,
                           const RunOptions& options = {});

struct BenchmarkOptions {
  bool run_siren = true;
  /// Worker threads for independent (experiment, seed) runs.
  unsigned jobs = 1;
};

/// Runs every (experiment, seed) pair. Output is sorted by experiment id,
/// then seed, regardless of `jobs`.
std::vector<SeedOutcome> run_benchmark(const std::vector<ExperimentConfig>& configs,
                                       const BenchmarkOptions& options = {});

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

/// Mean and population standard deviation (divide by n).
MeanStd mean_std(const std::vector<double>& values);

struct SummaryRow {
  ExperimentId experiment = ExperimentId::A;
  Method method = Method::Vekua;
  MeanStd seconds;
  MeanStd mse;
  std::size_t count = 0;
};

/// Groups results by (experiment, method); experiments ascending, Vekua first.
std::vector<SummaryRow> aggregate(const std::vector<ExperimentResult>& results);

/// All successful results from a benchmark run, in run order.
std::vector<ExperimentResult> collect_results(const std::vector<SeedOutcome>& outcomes);

}  // namespace vekua
