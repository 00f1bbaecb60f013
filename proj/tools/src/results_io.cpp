#include "vekua_cli/results_io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "vekua/errors.hpp"

namespace vekua::cli {
namespace {

using nlohmann::json;

constexpr int kRecordVersion = 1;

json to_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) {
    a.push_back(std::isnan(x) ? json(nullptr) : json(x));
  }
  return a;
}

std::vector<double> column_from_json(const json& a) {
  std::vector<double> v;
  for (const json& x : a) {
    v.push_back(x.is_null() ? std::numeric_limits<double>::quiet_NaN() : x.get<double>());
  }
  return v;
}

ExperimentId experiment_from_json(const json& j) {
  const auto id = parse_experiment_id(j.get<std::string>());
  if (!id) {
    throw ConfigError("results: unknown experiment '" + j.get<std::string>() + "'");
  }
  return *id;
}

Method method_from_json(const json& j) {
  const std::string name = j.get<std::string>();
  if (name == to_string(Method::Vekua)) {
    return Method::Vekua;
  }
  if (name == to_string(Method::Siren)) {
    return Method::Siren;
  }
  throw ConfigError("results: unknown method '" + name + "'");
}

}  // namespace

RunRecord make_run_record(const std::vector<SeedOutcome>& outcomes, const std::vector<std::uint32_t>& seeds,
                          std::uint32_t viz_seed) {
  RunRecord record;
  record.seeds = seeds;
  record.viz_seed = viz_seed;
  record.results = collect_results(outcomes);
  for (ExperimentResult& r : record.results) {
    r.test_line = {};
  }
  for (const SeedOutcome& o : outcomes) {
    record.failures.insert(record.failures.end(), o.failures.begin(), o.failures.end());
    if (o.seed == viz_seed && (o.vekua || o.siren)) {
      record.plots[o.experiment] = make_plot_series(o, default_config(o.experiment).plot_rows);
    }
  }
  return record;
}

void write_run_record(std::ostream& os, const RunRecord& record) {
  json j;
  j["format"] = "vekua-results";
  j["version"] = kRecordVersion;
  j["seeds"] = record.seeds;
  j["viz_seed"] = record.viz_seed;
  j["runs"] = json::array();
  for (const ExperimentResult& r : record.results) {
    j["runs"].push_back({{"experiment", std::string(1, to_char(r.experiment))},
                         {"method", to_string(r.method)},
                         {"seed", r.seed},
                         {"mse", r.mse},
                         {"wall_seconds", r.wall_seconds}});
  }
  j["failures"] = json::array();
  for (const Failure& f : record.failures) {
    j["failures"].push_back({{"experiment", std::string(1, to_char(f.experiment))},
                             {"method", to_string(f.method)},
                             {"seed", f.seed},
                             {"message", f.message}});
  }
  j["plots"] = json::object();
  for (const auto& [id, s] : record.plots) {
    json p{{"x", to_json(s.x)},
           {"truth", to_json(s.truth)},
           {"vekua_pred", to_json(s.vekua)},
           {"siren_pred", to_json(s.siren)}};
    if (s.noisy) {
      p["noisy_sample"] = to_json(*s.noisy);
    }
    j["plots"][std::string(1, to_char(id))] = std::move(p);
  }
  os << j.dump(2) << '\n';
}

RunRecord read_run_record(std::istream& is) {
  RunRecord record;
  try {
    const json j = json::parse(is);
    if (j.at("format") != "vekua-results" || j.at("version") != kRecordVersion) {
      throw ConfigError("results: unsupported format or version");
    }
    record.seeds = j.at("seeds").get<std::vector<std::uint32_t>>();
    record.viz_seed = j.at("viz_seed").get<std::uint32_t>();
    for (const json& r : j.at("runs")) {
      ExperimentResult result;
      result.experiment = experiment_from_json(r.at("experiment"));
      result.method = method_from_json(r.at("method"));
      result.seed = r.at("seed").get<std::uint32_t>();
      result.mse = r.at("mse").get<double>();
      result.wall_seconds = r.at("wall_seconds").get<double>();
      record.results.push_back(result);
    }
    for (const json& f : j.at("failures")) {
      record.failures.push_back({experiment_from_json(f.at("experiment")), f.at("seed").get<std::uint32_t>(),
                                 method_from_json(f.at("method")), f.at("message").get<std::string>()});
    }
    for (const auto& [key, p] : j.at("plots").items()) {
      PlotSeries s;
      s.x = column_from_json(p.at("x"));
      s.truth = column_from_json(p.at("truth"));
      s.vekua = column_from_json(p.at("vekua_pred"));
      s.siren = column_from_json(p.at("siren_pred"));
      if (p.contains("noisy_sample")) {
        s.noisy = column_from_json(p.at("noisy_sample"));
      }
      record.plots[experiment_from_json(json(key))] = std::move(s);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("results: ") + e.what());
  }
  return record;
}

void save_run_record(const std::filesystem::path& path, const RunRecord& record) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw ConfigError("cannot open " + path.string() + " for writing");
  }
  write_run_record(os, record);
}

RunRecord load_run_record(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw ConfigError("cannot open " + path.string() + " (run the benchmark first)");
  }
  return read_run_record(is);
}

}  // namespace vekua::cli
