// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fail.
//
//   vekua_acceptance               everything
//   vekua_acceptance --skip-siren  everything except the SIREN comparison
//   vekua_acceptance --siren-only  only the SIREN comparison

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "oracles.hpp"
#include "vekua/experiments.hpp"
#include "vekua/siren.hpp"
#include "vekua/special_functions.hpp"
#include "vekua/trefftz_basis.hpp"
#include "vekua/tsvd_solver.hpp"

namespace {

using namespace vekua;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

int g_failures = 0;

double report(std::string_view name, const std::function<Verdict()>& check) {
  const auto start = Clock::now();
  Verdict v;
  try {
    v = check();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = seconds_since(start);
  std::printf("%s %-28s %s [%.2f s]\n", v.pass ? "PASS" : "FAIL", std::string(name).c_str(), v.detail.c_str(),
              elapsed);
  std::fflush(stdout);
  if (!v.pass) {
    ++g_failures;
  }
  return elapsed;
}

Verdict experiment_a() {
  const auto start = Clock::now();
  const SeedOutcome o = run_experiment(default_config(ExperimentId::A), 42, RunOptions{false});
  const double runtime = seconds_since(start);
  if (!o.vekua) {
    return {false, "Vekua fit failed"};
  }
  const bool pass = o.vekua->mse <= 1e-25 && o.vekua->wall_seconds < 0.1 && runtime < 1.0;
  return {pass, fmt("mse=%.3e (<=1e-25) fit=%.2e s (<0.1) runtime=%.3f s (<1)", o.vekua->mse,
                    o.vekua->wall_seconds, runtime)};
}

Verdict experiment_b() {
  const auto start = Clock::now();
  const SeedOutcome o = run_experiment(default_config(ExperimentId::B), 42, RunOptions{false});
  const double runtime = seconds_since(start);
  if (!o.vekua) {
    return {false, "Vekua fit failed"};
  }
  return {o.vekua->mse <= 1e-20 && runtime < 1.0,
          fmt("hidden-edge mse=%.3e (<=1e-20) runtime=%.3f s (<1)", o.vekua->mse, runtime)};
}

Verdict experiment_c() {
  const auto start = Clock::now();
  std::vector<double> mse;
  for (std::uint32_t seed : {42u, 43u, 44u}) {
    const SeedOutcome o = run_experiment(default_config(ExperimentId::C), seed, RunOptions{false});
    if (!o.vekua) {
      return {false, fmt("Vekua fit failed at seed %u", seed)};
    }
    mse.push_back(o.vekua->mse);
  }
  const double runtime = seconds_since(start);
  const MeanStd s = mean_std(mse);
  return {s.mean <= 0.1 && runtime < 2.0,
          fmt("mean mse=%.3e +- %.3e over seeds 42,43,44 (<=0.1) runtime=%.3f s (<2)", s.mean, s.std, runtime)};
}

Verdict experiment_d() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (std::uint32_t seed : {42u, 43u, 44u}) {
    const SeedOutcome o = run_experiment(default_config(ExperimentId::D), seed, RunOptions{false});
    if (!o.vekua) {
      return {false, fmt("Vekua fit failed at seed %u", seed)};
    }
    worst = std::max(worst, o.vekua->mse);
  }
  const double runtime = seconds_since(start);
  return {worst <= 1e-6 && runtime < 2.0,
          fmt("worst mse=%.3e over seeds 42,43,44 (<=1e-6) runtime=%.3f s (<2)", worst, runtime)};
}

Verdict bessel_accuracy() {
  // 31 orders x 33 arguments = 1023 points; relative 1e-13, absolute 1e-15
  // where J_n is near a zero.
  double worst_rel = 0.0;
  int bad = 0;
  int points = 0;
  for (int n = 0; n <= 30; ++n) {
    for (int i = 0; i < 33; ++i) {
      const double x = 25.0 * i / 32.0;
      const double expected = vekua::testing::bessel_series_oracle(n, x);
      const double err = std::abs(bessel_j(n, x) - expected);
      if (err > std::max(1e-13 * std::abs(expected), 1e-15)) {
        ++bad;
      }
      if (std::abs(expected) > 1e-2) {
        worst_rel = std::max(worst_rel, err / std::abs(expected));
      }
      ++points;
    }
  }
  // Three-term recurrence on x in [0.5, 25], n in [1, 30].
  double worst_recurrence = 0.0;
  for (int i = 0; i <= 49; ++i) {
    const double x = 0.5 + 24.5 * i / 49.0;
    const std::vector<double> j = bessel_j_sequence(31, x);
    for (int n = 1; n <= 30; ++n) {
      const double residual = j[n - 1] + j[n + 1] - 2.0 * n / x * j[n];
      worst_recurrence = std::max(worst_recurrence, std::abs(residual) / std::max(1.0, std::abs(j[n])));
    }
  }
  // J_0^2 + 2 sum_{n=1}^{40} J_n^2 = 1 on [0, 25].
  double worst_norm = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = 0.25 * i;
    double sum = 0.0;
    for (int n = 1; n <= 40; ++n) {
      sum += bessel_j(n, x) * bessel_j(n, x);
    }
    worst_norm = std::max(worst_norm, std::abs(bessel_j(0, x) * bessel_j(0, x) + 2.0 * sum - 1.0));
  }
  const bool pass = bad == 0 && worst_recurrence <= 1e-11 && worst_norm <= 1e-10;
  return {pass, fmt("%d/%d grid points outside tolerance, worst rel(|J|>1e-2)=%.1e, recurrence=%.1e (<=1e-11), "
                    "normalization=%.1e (<=1e-10)",
                    bad, points, worst_rel, worst_recurrence, worst_norm)};
}

Verdict tsvd_correctness() {
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int cols = std::uniform_int_distribution<int>(1, 20)(rng);
    const int rows = std::uniform_int_distribution<int>(cols, 100)(rng);
    // Singular values in [1, 100]: condition number at most 100.
    std::vector<double> sigma(static_cast<std::size_t>(cols));
    std::uniform_real_distribution<double> log_sigma(0.0, 2.0);
    for (double& s : sigma) {
      s = std::pow(10.0, log_sigma(rng));
    }
    std::sort(sigma.rbegin(), sigma.rend());
    const Eigen::MatrixXd a = vekua::testing::matrix_with_singular_values(rows, sigma, rng);
    const Eigen::VectorXd b = vekua::testing::random_vector(rows, rng);
    const LstsqSolution sol = tsvd_lstsq(a, b, TruncationPolicy(1e-14));
    worst = std::max(worst, vekua::testing::relative_error(sol.weights, vekua::testing::normal_equations_solve(a, b)));
  }

  // Rank-deficient constructions: monotone truncation and minimum norm.
  bool monotone = true;
  bool minimum_norm = true;
  const std::vector<double> sigma{10.0, 5.0, 2.0, 1e-3, 5e-4, 0.0, 0.0};
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::MatrixXd a = vekua::testing::matrix_with_singular_values(40, sigma, rng);
    const Eigen::VectorXd b = vekua::testing::random_vector(40, rng);
    int previous_rank = 8;
    double previous_residual = 0.0;
    for (double rcond : {1e-14, 1e-5, 2e-4, 1e-2, 0.3, 0.6}) {
      const LstsqSolution s = tsvd_lstsq(a, b, TruncationPolicy(rcond));
      const double residual = (a * s.weights - b).norm();
      monotone = monotone && s.effective_rank <= previous_rank && residual >= previous_residual - 1e-12 * b.norm();
      previous_rank = s.effective_rank;
      previous_residual = residual;
    }
    // The rank-5 solution has no component in the null space of A.
    const LstsqSolution s = tsvd_lstsq(a, b, TruncationPolicy(1e-14));
    const ThinSvd svd = thin_svd(a);
    const Eigen::MatrixXd null_space = svd.v.rightCols(2);
    minimum_norm = minimum_norm && s.effective_rank == 5 &&
                   (null_space.transpose() * s.weights).norm() <= 1e-10 * s.weights.norm();
  }
  const bool pass = worst <= 1e-9 && monotone && minimum_norm;
  return {pass, fmt("worst rel err vs normal equations=%.1e over 100 systems (<=1e-9), monotone=%s, min-norm=%s", worst,
                    monotone ? "yes" : "no", minimum_norm ? "yes" : "no")};
}

Verdict trefftz_residual() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> radius(0.0, 0.9);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double h = 1e-4;
  const std::vector<BasisSpec> specs{BasisSpec::laplace(2), BasisSpec::laplace(15), BasisSpec::helmholtz(5, 20.0),
                                     BasisSpec::helmholtz(8, 15.0), BasisSpec::helmholtz(15, 10.0)};
  bool pass = true;
  double worst_laplace = 0.0;
  double worst_helmholtz = 0.0;
  for (const BasisSpec& spec : specs) {
    const double k = spec.wavenumber().value_or(0.0);
    for (int p = 0; p < 50; ++p) {
      const double r = radius(rng);
      const double t = angle(rng);
      const double x = r * std::cos(t);
      const double y = r * std::sin(t);
      const SamplePoints stencil{{x, x + h, x - h, x, x}, {y, y, y, y + h, y - h}};
      const RowMatrix v = basis_values(spec, stencil);
      for (Eigen::Index j = 0; j < v.cols(); ++j) {
        const double lap = (v(1, j) + v(2, j) + v(3, j) + v(4, j) - 4.0 * v(0, j)) / (h * h);
        if (spec.mode() == BasisMode::Laplace) {
          worst_laplace = std::max(worst_laplace, std::abs(lap));
          pass = pass && std::abs(lap) <= 1e-4;
        } else {
          const double rel = std::abs(lap + k * k * v(0, j)) / (k * k);
          worst_helmholtz = std::max(worst_helmholtz, rel);
          pass = pass && rel <= 1e-3;
        }
      }
    }
  }
  return {pass, fmt("worst |Lap phi|=%.1e (<=1e-4), worst |Lap phi + k^2 phi|/k^2=%.1e (<=1e-3)", worst_laplace,
                    worst_helmholtz)};
}

Verdict siren_gradient_check() {
  SirenConfig config;
  config.layer_sizes = {2, 16, 16, 1};
  config.seed = 7;
  SirenNetwork net = siren_init(config);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (SirenLayer& l : net.layers) {
    for (Eigen::Index i = 0; i < l.bias.size(); ++i) {
      l.bias[i] = 0.1 * unit(rng);
    }
  }
  SamplePoints pts;
  Eigen::VectorXd u(10);
  for (int i = 0; i < 10; ++i) {
    pts.x.push_back(unit(rng));
    pts.y.push_back(unit(rng));
    u[i] = unit(rng);
  }
  const Eigen::MatrixXd x = to_input_matrix(pts);
  const LossAndGradient lg = siren_loss_and_gradient(net, config, x, u);
  auto loss_at = [&](const SirenNetwork& n) { return (siren_forward(n, config, x) - u).squaredNorm() / 10.0; };

  // Relative error per parameter, against max(|numeric|, 1e-6) so that
  // vanishing gradients are judged on an absolute scale.
  const double h = 1e-6;
  double worst = 0.0;
  int checked = 0;
  for (std::size_t li = 0; li < net.layers.size(); ++li) {
    const Eigen::Index n_weight = net.layers[li].weight.size();
    for (Eigen::Index k = 0; k < n_weight + net.layers[li].bias.size(); ++k) {
      auto param = [&](SirenNetwork& n) -> double& {
        return k < n_weight ? n.layers[li].weight.data()[k] : n.layers[li].bias.data()[k - n_weight];
      };
      SirenNetwork plus = net;
      SirenNetwork minus = net;
      param(plus) += h;
      param(minus) -= h;
      const double numeric = (loss_at(plus) - loss_at(minus)) / (2.0 * h);
      const double analytic =
          k < n_weight ? lg.gradient.weight[li].data()[k] : lg.gradient.bias[li].data()[k - n_weight];
      worst = std::max(worst, std::abs(analytic - numeric) / std::max(std::abs(numeric), 1e-6));
      ++checked;
    }
  }
  return {worst <= 1e-5, fmt("worst relative error=%.1e over %d parameters (<=1e-5)", worst, checked)};
}

Verdict siren_claim() {
  bool pass = true;
  std::string detail;
  for (ExperimentId id : kAllExperiments) {
    const SeedOutcome o = run_experiment(default_config(id), 42, RunOptions{true});
    if (!o.vekua || !o.siren) {
      return {false, fmt("%c: a method failed", to_char(id))};
    }
    const double mse_ratio = o.siren->mse / std::max(o.vekua->mse, std::numeric_limits<double>::min());
    const double time_ratio = o.siren->wall_seconds / o.vekua->wall_seconds;
    const bool ok = mse_ratio >= 1e3 && o.vekua->wall_seconds < o.siren->wall_seconds / 100.0;
    pass = pass && ok;
    detail += fmt("%s%c[%s mse %.2e vs %.2e (x%.1e), time %.2e vs %.1f s (x%.0f)]", detail.empty() ? "" : " ",
                  to_char(id), ok ? "ok" : "MISS", o.vekua->mse, o.siren->mse, mse_ratio, o.vekua->wall_seconds,
                  o.siren->wall_seconds, time_ratio);
    std::printf("  .. %c: Vekua mse=%.3e fit=%.3e s | SIREN mse=%.3e train=%.2f s\n", to_char(id), o.vekua->mse,
                o.vekua->wall_seconds, o.siren->mse, o.siren->wall_seconds);
    std::fflush(stdout);
  }
  return {pass, detail};
}

}  // namespace

int main(int argc, char** argv) {
  bool skip_siren = false;
  bool siren_only = false;
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--skip-siren") {
      skip_siren = true;
    } else if (arg == "--siren-only") {
      siren_only = true;
    } else {
      std::fprintf(stderr, "usage: %s [--skip-siren | --siren-only]\n", argv[0]);
      return 2;
    }
  }
  if (skip_siren && siren_only) {
    std::fprintf(stderr, "--skip-siren and --siren-only are mutually exclusive\n");
    return 2;
  }

  if (!siren_only) {
    const auto start = Clock::now();
    report("experiment A (Helmholtz)", experiment_a);
    report("experiment B (holography)", experiment_b);
    report("experiment C (robustness)", experiment_c);
    report("experiment D (chaos)", experiment_d);
    report("Bessel accuracy", bessel_accuracy);
    report("TSVD correctness", tsvd_correctness);
    report("Trefftz PDE residual", trefftz_residual);
    report("SIREN gradient check", siren_gradient_check);
    const double total = seconds_since(start);
    report("fast suite runtime", [total] { return Verdict{total < 30.0, fmt("%.2f s (<30)", total)}; });
  }
  if (!skip_siren) {
    report("SIREN comparative claim", siren_claim);
  }
  std::printf("%s: %d failing criteria\n", g_failures == 0 ? "OK" : "FAILED", g_failures);
  return g_failures == 0 ? 0 : 1;
}
