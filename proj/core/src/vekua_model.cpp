#include "vekua/vekua_model.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "vekua/errors.hpp"

namespace vekua {

FittedModel fit(const BasisSpec& spec, const SamplePoints& pts, const std::vector<double>& u,
                const TruncationPolicy& policy) {
  if (pts.size() == 0) {
    throw EmptyDataError("fit: no observations");
  }
  if (u.size() != pts.size()) {
    throw DomainError(fmt::format("fit: {} observations for {} sample points", u.size(), pts.size()));
  }
  const Eigen::Map<const Eigen::VectorXd> target(u.data(), static_cast<Eigen::Index>(u.size()));

  const auto start = std::chrono::steady_clock::now();
  const FeatureMatrix features = evaluate_basis(spec, pts);
  const LstsqSolution sol = tsvd_lstsq(features.normalized(), target, policy);
  const auto stop = std::chrono::steady_clock::now();

  return FittedModel{spec, features.column_scales, sol.weights, sol.effective_rank,
                     std::chrono::duration<double>(stop - start).count()};
}

std::vector<double> predict(const FittedModel& model, const SamplePoints& pts) {
  RowMatrix phi = basis_values(model.spec, pts);
  phi.array().rowwise() /= model.column_scales.transpose().array();
  const Eigen::VectorXd out = phi * model.weights;
  return {out.data(), out.data() + out.size()};
}

namespace {

void write_vector(std::ostream& os, const char* key, const Eigen::VectorXd& v) {
  fmt::print(os, "{} {}", key, v.size());
  for (double value : v) {
    fmt::print(os, " {:.17g}", value);
  }
  os << '\n';
}

double parse_double(const std::string& token) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ConfigError("model file: bad number '" + token + "'");
  }
  return value;
}

int parse_int(const std::string& token) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ConfigError("model file: bad integer '" + token + "'");
  }
  return value;
}

Eigen::VectorXd parse_vector(std::istringstream& line, const std::string& key) {
  std::string token;
  if (!(line >> token)) {
    throw ConfigError("model file: missing length for " + key);
  }
  const int n = parse_int(token);
  if (n < 0) {
    throw ConfigError("model file: negative length for " + key);
  }
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) {
    if (!(line >> token)) {
      throw ConfigError(fmt::format("model file: {} has fewer than {} values", key, n));
    }
    v[i] = parse_double(token);
  }
  if (line >> token) {
    throw ConfigError("model file: trailing data after " + key);
  }
  return v;
}

}  // namespace

void write_model(std::ostream& os, const FittedModel& model) {
  fmt::print(os, "vekua-model {}\n", kModelFormatVersion);
  fmt::print(os, "mode {}\n", model.spec.mode() == BasisMode::Laplace ? "laplace" : "helmholtz");
  fmt::print(os, "n_harmonics {}\n", model.spec.n_harmonics());
  if (model.spec.wavenumber()) {
    fmt::print(os, "wavenumber {:.17g}\n", *model.spec.wavenumber());
  }
  write_vector(os, "scales", model.column_scales);
  write_vector(os, "weights", model.weights);
}

FittedModel read_model(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) {
    throw ConfigError("model file: empty input");
  }
  {
    std::istringstream header(line);
    std::string magic;
    std::string version;
    if (!(header >> magic >> version) || magic != "vekua-model") {
      throw ConfigError("model file: missing 'vekua-model' header");
    }
    if (parse_int(version) != kModelFormatVersion) {
      throw ConfigError("model file: unsupported format version " + version);
    }
  }

  std::optional<std::string> mode;
  std::optional<int> n_harmonics;
  std::optional<double> wavenumber;
  std::optional<Eigen::VectorXd> scales;
  std::optional<Eigen::VectorXd> weights;

  while (std::getline(is, line)) {
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) {
      continue;
    }
    std::string value;
    if (key == "scales") {
      scales = parse_vector(fields, key);
    } else if (key == "weights") {
      weights = parse_vector(fields, key);
    } else if (!(fields >> value)) {
      throw ConfigError("model file: missing value for " + key);
    } else if (key == "mode") {
      mode = value;
    } else if (key == "n_harmonics") {
      n_harmonics = parse_int(value);
    } else if (key == "wavenumber") {
      wavenumber = parse_double(value);
    } else {
      throw ConfigError("model file: unknown key " + key);
    }
  }

  if (!mode || !n_harmonics || !scales || !weights) {
    throw ConfigError("model file: mode, n_harmonics, scales and weights are required");
  }
  BasisMode basis_mode = BasisMode::Laplace;
  if (*mode == "helmholtz") {
    basis_mode = BasisMode::Helmholtz;
  } else if (*mode != "laplace") {
    throw ConfigError("model file: unknown mode " + *mode);
  }
  BasisSpec spec(basis_mode, *n_harmonics, wavenumber);
  if (scales->size() != spec.size() || weights->size() != spec.size()) {
    throw ConfigError(fmt::format("model file: expected {} scales and weights", spec.size()));
  }
  return FittedModel{spec, *scales, *weights, 0, 0.0};
}

void save_model(const std::filesystem::path& path, const FittedModel& model) {
  std::ofstream os(path);
  if (!os) {
    throw ConfigError("cannot open " + path.string() + " for writing");
  }
  write_model(os, model);
}

FittedModel load_model(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) {
    throw ConfigError("cannot open " + path.string());
  }
  return read_model(is);
}

}  // namespace vekua
