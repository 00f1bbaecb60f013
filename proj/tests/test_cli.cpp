#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <gtest/gtest.h>

#include "vekua/errors.hpp"
#include "vekua/reporting.hpp"
#include "vekua_cli/cli.hpp"
#include "vekua_cli/results_io.hpp"

namespace vekua::cli {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

// Drops the time column, the only nondeterministic part of a row. A data
// row ends in the tokens "t1 ± t2 m1 ± m2".
std::vector<std::string> rows_without_time(const std::string& table) {
  std::vector<std::string> rows;
  std::istringstream lines(table);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream words(line);
    std::vector<std::string> tokens{std::istream_iterator<std::string>(words), {}};
    if (line.find("\u00b1") != std::string::npos && tokens.size() >= 7 && tokens[tokens.size() - 5] == "\u00b1") {
      tokens.erase(tokens.end() - 6, tokens.end() - 3);
    }
    std::string joined;
    for (const std::string& t : tokens) {
      joined += (joined.empty() ? "" : " ") + t;
    }
    rows.push_back(joined);
  }
  return rows;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("vekua_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(CliTest, RunSingleExperimentSmoke) {
  const Invocation r = invoke({"run", "--experiment", "A", "--seeds", "42", "--skip-siren", "--out", dir_.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("A: Helmholtz  Vekua"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("SIREN"), std::string::npos);
  EXPECT_NE(r.out.find("over 1 Seeds"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "A.csv"));
  EXPECT_FALSE(fs::exists(dir_ / "B.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "results.json"));
  EXPECT_TRUE(fs::exists(dir_ / "models" / "A_seed42.model"));
  EXPECT_FALSE(fs::exists(dir_ / "summary.txt"));
  const FittedModel model = load_model(dir_ / "models" / "A_seed42.model");
  EXPECT_EQ(model.spec, BasisSpec::helmholtz(5, 20.0));
}

TEST_F(CliTest, AllMatchesLibraryAggregate) {
  const Invocation r = invoke({"all", "--siren-steps", "2", "--out", dir_.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;

  std::vector<ExperimentConfig> configs;
  for (ExperimentId id : kAllExperiments) {
    configs.push_back(default_config(id));
    configs.back().siren.steps = 2;
  }
  const std::vector<SummaryRow> summary = aggregate(collect_results(run_benchmark(configs)));
  ASSERT_EQ(summary.size(), 8u);
  for (const SummaryRow& s : summary) {
    EXPECT_EQ(s.count, 3u);
  }
  const std::string expected = render_text_table(make_report_rows(summary), 3);
  EXPECT_EQ(rows_without_time(read_file(dir_ / "summary.txt")), rows_without_time(expected));

  const std::string tex = read_file(dir_ / "summary.tex");
  EXPECT_NE(tex.find("D: Chaos & Vekua"), std::string::npos);
  for (const char* name : {"A.csv", "B.csv", "C.csv", "D.csv"}) {
    EXPECT_TRUE(fs::exists(dir_ / name)) << name;
  }
  std::ifstream c(dir_ / "C.csv");
  const PlotSeries series = read_plot_csv(c);
  ASSERT_TRUE(series.noisy);
  EXPECT_FALSE(std::isnan(series.siren[0]));
}

TEST_F(CliTest, VekuaOnlyOutputIsDeterministic) {
  const std::vector<std::string> args{"run", "--skip-siren", "--out", dir_.string()};
  const Invocation first = invoke(args);
  const std::string csv = read_file(dir_ / "D.csv");
  const Invocation second = invoke(args);
  ASSERT_EQ(first.code, kExitOk);
  EXPECT_EQ(rows_without_time(first.out), rows_without_time(second.out));
  EXPECT_EQ(read_file(dir_ / "D.csv"), csv);
}

TEST_F(CliTest, ReportAndExportReadResults) {
  ASSERT_EQ(invoke({"run", "--experiment", "B,C", "--seeds", "43,42", "--skip-siren", "--out", dir_.string()}).code,
            kExitOk);
  fs::remove(dir_ / "C.csv");
  const Invocation report = invoke({"report", "--out", dir_.string()});
  ASSERT_EQ(report.code, kExitOk) << report.err;
  EXPECT_NE(report.out.find("over 2 Seeds"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "summary.tex"));

  const Invocation exported = invoke({"export", "--out", dir_.string()});
  ASSERT_EQ(exported.code, kExitOk) << exported.err;
  std::ifstream c(dir_ / "C.csv");
  const PlotSeries series = read_plot_csv(c);
  EXPECT_EQ(series.x.size(), 100u);
  EXPECT_TRUE(std::isnan(series.siren[0]));
  std::ifstream b(dir_ / "B.csv");
  EXPECT_EQ(read_plot_csv(b).x.size(), 50u);
}

TEST_F(CliTest, OutDirFallsBackToEnvironment) {
  ::setenv("VEKUA_OUT_DIR", dir_.string().c_str(), 1);
  const Invocation r = invoke({"run", "--experiment", "b", "--seeds", "7", "--skip-siren"});
  ::unsetenv("VEKUA_OUT_DIR");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  // The visualization seed falls back to the only selected seed.
  EXPECT_TRUE(fs::exists(dir_ / "B.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "models" / "B_seed7.model"));
}

TEST_F(CliTest, RcondOverrides) {
  ASSERT_EQ(invoke({"run", "--experiment", "C", "--seeds", "42", "--skip-siren", "--rcond", "C=0.99", "--out",
                    dir_.string()})
                .code,
            kExitOk);
  const RunRecord truncated = load_run_record(dir_ / "results.json");
  ASSERT_EQ(invoke({"run", "--experiment", "C", "--seeds", "42", "--skip-siren", "--out", dir_.string()}).code,
            kExitOk);
  const RunRecord standard = load_run_record(dir_ / "results.json");
  EXPECT_NEAR(standard.results[0].mse, 0.013141047574360404, 1e-12);
  EXPECT_GT(truncated.results[0].mse, standard.results[0].mse);
}

TEST_F(CliTest, UsageErrorsExitWithTwo) {
  const std::string out = dir_.string();
  const std::vector<std::vector<std::string>> cases{
      {"run", "--experiment", "Z", "--out", out},
      {"run", "--seeds", "42,x", "--out", out},
      {"run", "--rcond", "1.5", "--out", out},
      {"run", "--experiment", "A", "--rcond", "D=1e-3", "--out", out},
      {"run", "--seeds", "1,2", "--viz-seed", "42", "--out", out},
      {"run", "--skip-siren", "--siren-steps", "5", "--out", out},
      {"run", "--jobs", "0", "--out", out},
      {"report", "--seeds", "42", "--out", out},
      {"report", "--out", out},  // no results.json yet
      {"frobnicate"},
      {},
  };
  for (const auto& args : cases) {
    const Invocation r = invoke(args);
    EXPECT_EQ(r.code, kExitUsage) << (args.empty() ? "<none>" : args[0] + " " + (args.size() > 1 ? args[1] : ""));
    EXPECT_NE(r.err.find("error"), std::string::npos);
  }
}

TEST_F(CliTest, UnwritableOutputDirectory) {
  std::ofstream(dir_.string() + ".file") << "x";
  const Invocation r =
      invoke({"run", "--experiment", "A", "--seeds", "42", "--skip-siren", "--out", dir_.string() + ".file/sub"});
  fs::remove(dir_.string() + ".file");
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("output directory"), std::string::npos);
}

TEST(CliFailures, NumericalFailureNamesExperimentAndSeed) {
  SeedOutcome ok;
  SeedOutcome bad;
  bad.experiment = ExperimentId::C;
  bad.seed = 43;
  bad.failures.push_back({ExperimentId::C, 43, Method::Siren, "siren: non-finite loss at step 17"});
  std::ostringstream err;
  EXPECT_EQ(report_failures({ok}, err), kExitOk);
  EXPECT_EQ(report_failures({ok, bad}, err), kExitFailure);
  EXPECT_NE(err.str().find("experiment C seed 43 (SIREN)"), std::string::npos);
}

TEST(CliHelp, PrintsUsage) {
  const Invocation r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("--skip-siren"), std::string::npos);
}

TEST(ResultsIo, RoundTrip) {
  RunRecord record;
  record.seeds = {42, 43};
  record.viz_seed = 43;
  ExperimentResult r;
  r.experiment = ExperimentId::D;
  r.method = Method::Siren;
  r.seed = 43;
  r.mse = 0.1 + 0.2;
  r.wall_seconds = 12.5;
  record.results.push_back(r);
  record.failures.push_back({ExperimentId::B, 42, Method::Vekua, "boom"});
  PlotSeries s;
  s.x = {1.0 / 3.0};
  s.truth = {2.0};
  s.vekua = {3.0};
  s.siren = {std::nan("")};
  s.noisy = std::vector<double>{4.0};
  record.plots[ExperimentId::C] = s;

  std::stringstream ss;
  write_run_record(ss, record);
  const RunRecord back = read_run_record(ss);
  EXPECT_EQ(back.seeds, record.seeds);
  EXPECT_EQ(back.viz_seed, 43u);
  ASSERT_EQ(back.results.size(), 1u);
  EXPECT_EQ(back.results[0].mse, r.mse);
  EXPECT_EQ(back.results[0].method, Method::Siren);
  EXPECT_EQ(back.failures[0].message, "boom");
  const PlotSeries& p = back.plots.at(ExperimentId::C);
  EXPECT_EQ(p.x[0], 1.0 / 3.0);
  EXPECT_TRUE(std::isnan(p.siren[0]));
  EXPECT_EQ((*p.noisy)[0], 4.0);

  std::istringstream broken("{\"format\": \"other\"}");
  EXPECT_THROW(read_run_record(broken), ConfigError);
}

}  // namespace
}  // namespace vekua::cli
