#include "vekua_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string_view>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "vekua/errors.hpp"
#include "vekua/reporting.hpp"
#include "vekua_cli/results_io.hpp"

namespace vekua::cli {
namespace {

namespace fs = std::filesystem;

constexpr std::uint32_t kDefaultVizSeed = 42;

// Raised for anything that maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string experiment = "all";
  std::string seeds;
  bool skip_siren = false;
  std::string out;
  std::vector<std::string> rcond;
  std::optional<std::uint32_t> viz_seed;
  unsigned jobs = 1;
  std::optional<int> siren_steps;
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(sep, begin);
    parts.push_back(text.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin));
    if (end == std::string_view::npos) {
      return parts;
    }
    begin = end + 1;
  }
}

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

std::vector<ExperimentId> parse_experiments(const std::string& text) {
  if (text == "all" || text == "ALL") {
    return {std::begin(kAllExperiments), std::end(kAllExperiments)};
  }
  std::vector<ExperimentId> ids;
  for (std::string_view part : split(text, ',')) {
    const auto id = parse_experiment_id(part);
    if (!id) {
      throw UsageError(fmt::format("unknown experiment id '{}' (expected A, B, C, D or all)", part));
    }
    if (std::find(ids.begin(), ids.end(), *id) == ids.end()) {
      ids.push_back(*id);
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::uint32_t> parse_seeds(const std::string& text) {
  std::vector<std::uint32_t> seeds;
  for (std::string_view part : split(text, ',')) {
    const auto seed = parse_number<std::uint32_t>(part);
    if (!seed) {
      throw UsageError(fmt::format("invalid seed '{}' in --seeds", part));
    }
    if (std::find(seeds.begin(), seeds.end(), *seed) == seeds.end()) {
      seeds.push_back(*seed);
    }
  }
  return seeds;
}

double parse_rcond_value(std::string_view text) {
  const auto value = parse_number<double>(text);
  if (!value) {
    throw UsageError(fmt::format("invalid rcond '{}'", text));
  }
  try {
    TruncationPolicy{*value};
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  return *value;
}

// "--rcond VALUE" applies to every selected experiment, "--rcond ID=VALUE"
// to one; later entries win.
void apply_rcond(const std::vector<std::string>& entries, std::vector<ExperimentConfig>& configs) {
  for (const std::string& entry : entries) {
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos) {
      const double value = parse_rcond_value(entry);
      for (ExperimentConfig& c : configs) {
        c.rcond = value;
      }
      continue;
    }
    const std::string_view key = std::string_view(entry).substr(0, eq);
    const auto id = parse_experiment_id(key);
    if (!id) {
      throw UsageError(fmt::format("unknown experiment id '{}' in --rcond", key));
    }
    const double value = parse_rcond_value(std::string_view(entry).substr(eq + 1));
    auto it = std::find_if(configs.begin(), configs.end(), [&](const ExperimentConfig& c) { return c.id == *id; });
    if (it == configs.end()) {
      throw UsageError(fmt::format("--rcond {} targets experiment {}, which is not selected", entry, to_char(*id)));
    }
    it->rcond = value;
  }
}

fs::path resolve_out_dir(const Options& opts) {
  if (!opts.out.empty()) {
    return opts.out;
  }
  if (const char* env = std::getenv("VEKUA_OUT_DIR"); env && *env) {
    return env;
  }
  return "results";
}

void ensure_writable(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw UsageError(fmt::format("output directory '{}' cannot be created", dir.string()));
  }
  const fs::path probe = dir / ".vekua-write-test";
  {
    std::ofstream os(probe);
    if (!(os << "ok")) {
      throw UsageError(fmt::format("output directory '{}' is not writable", dir.string()));
    }
  }
  fs::remove(probe, ec);
}

int do_run(const Options& opts, bool write_summary, std::ostream& out, std::ostream& err) {
  const std::vector<ExperimentId> ids = parse_experiments(opts.experiment);
  std::vector<std::uint32_t> seeds = default_config(ExperimentId::A).seeds;
  if (!opts.seeds.empty()) {
    seeds = parse_seeds(opts.seeds);
  }
  if (opts.siren_steps && opts.skip_siren) {
    throw UsageError("--siren-steps conflicts with --skip-siren");
  }
  std::uint32_t viz_seed = seeds.front();
  if (opts.viz_seed) {
    if (std::find(seeds.begin(), seeds.end(), *opts.viz_seed) == seeds.end()) {
      throw UsageError(fmt::format("--viz-seed {} is not among the selected seeds", *opts.viz_seed));
    }
    viz_seed = *opts.viz_seed;
  } else if (std::find(seeds.begin(), seeds.end(), kDefaultVizSeed) != seeds.end()) {
    viz_seed = kDefaultVizSeed;
  }

  std::vector<ExperimentConfig> configs;
  for (ExperimentId id : ids) {
    ExperimentConfig c = default_config(id);
    c.seeds = seeds;
    if (opts.siren_steps) {
      c.siren.steps = *opts.siren_steps;
    }
    configs.push_back(std::move(c));
  }
  apply_rcond(opts.rcond, configs);

  const fs::path dir = resolve_out_dir(opts);
  ensure_writable(dir);

  const std::vector<SeedOutcome> outcomes = run_benchmark(configs, {!opts.skip_siren, opts.jobs});
  const std::vector<ReportRow> rows = make_report_rows(aggregate(collect_results(outcomes)));
  out << render_text_table(rows, seeds.size());

  save_run_record(dir / "results.json", make_run_record(outcomes, seeds, viz_seed));
  export_plot_data(outcomes, viz_seed, dir);
  fs::create_directories(dir / "models");
  for (const SeedOutcome& o : outcomes) {
    if (o.seed == viz_seed && o.model) {
      save_model(dir / "models" / fmt::format("{}_seed{}.model", to_char(o.experiment), o.seed), *o.model);
    }
  }
  if (write_summary) {
    write_summary_files(rows, seeds.size(), dir);
  }
  fmt::print(out, "wrote results to {}\n", dir.string());
  return report_failures(outcomes, err);
}

void reject_run_flags(const Options& opts, const std::string& command) {
  if (opts.experiment != "all" || !opts.seeds.empty() || opts.skip_siren || !opts.rcond.empty() ||
      opts.viz_seed || opts.siren_steps || opts.jobs != 1) {
    throw UsageError(fmt::format("'{}' reads results.json; only --out applies", command));
  }
}

RunRecord load_record(const fs::path& dir) {
  try {
    return load_run_record(dir / "results.json");
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
}

int do_report(const Options& opts, std::ostream& out, std::ostream& err) {
  reject_run_flags(opts, "report");
  const fs::path dir = resolve_out_dir(opts);
  const RunRecord record = load_record(dir);
  ensure_writable(dir);
  const std::vector<ReportRow> rows = make_report_rows(aggregate(record.results));
  write_summary_files(rows, record.seeds.size(), dir);
  out << render_text_table(rows, record.seeds.size());
  for (const Failure& f : record.failures) {
    fmt::print(err, "note: experiment {} seed {} ({}) failed during the run: {}\n", to_char(f.experiment), f.seed,
               to_string(f.method), f.message);
  }
  fmt::print(out, "wrote {} and {}\n", (dir / "summary.txt").string(), (dir / "summary.tex").string());
  return kExitOk;
}

int do_export(const Options& opts, std::ostream& out) {
  reject_run_flags(opts, "export");
  const fs::path dir = resolve_out_dir(opts);
  const RunRecord record = load_record(dir);
  ensure_writable(dir);
  for (const auto& [id, series] : record.plots) {
    const fs::path path = dir / fmt::format("{}.csv", to_char(id));
    std::ofstream os(path, std::ios::binary);
    write_plot_csv(os, series);
    fmt::print(out, "wrote {}\n", path.string());
  }
  return kExitOk;
}

}  // namespace

int report_failures(const std::vector<SeedOutcome>& outcomes, std::ostream& err) {
  int status = kExitOk;
  for (const SeedOutcome& o : outcomes) {
    for (const Failure& f : o.failures) {
      fmt::print(err, "error: experiment {} seed {} ({}): {}\n", to_char(f.experiment), f.seed, to_string(f.method),
                 f.message);
      status = kExitFailure;
    }
  }
  return status;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vekua layer vs SIREN benchmark"};
  app.name("vekua-bench");
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--experiment", opts.experiment, "A, B, C, D, a comma list, or all")->capture_default_str();
  app.add_option("--seeds", opts.seeds, "Comma-separated seeds (default 42,43,44)");
  app.add_flag("--skip-siren", opts.skip_siren, "Run the Vekua layer only");
  app.add_option("--out", opts.out, "Output directory (default $VEKUA_OUT_DIR, else results)");
  app.add_option("--rcond", opts.rcond, "Truncation threshold VALUE or ID=VALUE; repeatable");
  app.add_option("--viz-seed", opts.viz_seed, "Seed whose test lines are exported (default 42)");
  app.add_option("--jobs", opts.jobs, "Worker threads for independent runs")->check(CLI::PositiveNumber);
  app.add_option("--siren-steps", opts.siren_steps, "Override the number of SIREN training steps")
      ->check(CLI::NonNegativeNumber);

  CLI::App* run = app.add_subcommand("run", "Run experiments; write results.json, plot CSVs and models");
  CLI::App* report = app.add_subcommand("report", "Write summary.txt and summary.tex from results.json");
  CLI::App* exp = app.add_subcommand("export", "Write per-experiment plot CSVs from results.json");
  CLI::App* all = app.add_subcommand("all", "run, then report");

  std::vector<std::string> argv_storage{"vekua-bench"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "error: {}\n{}", e.what(), app.help());
    return kExitUsage;
  }

  try {
    if (run->parsed()) {
      return do_run(opts, false, out, err);
    }
    if (all->parsed()) {
      return do_run(opts, true, out, err);
    }
    if (report->parsed()) {
      return do_report(opts, out, err);
    }
    if (exp->parsed()) {
      return do_export(opts, out);
    }
  } catch (const UsageError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace vekua::cli
