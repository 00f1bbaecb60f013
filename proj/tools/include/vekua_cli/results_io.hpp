#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <vector>

#include "vekua/experiments.hpp"
#include "vekua/reporting.hpp"

namespace vekua::cli {

/// Everything `report` and `export` need from a previous `run`.
struct RunRecord {
  std::vector<std::uint32_t> seeds;
  std::uint32_t viz_seed = 42;
  std::vector<ExperimentResult> results;  // test lines are not persisted
  std::vector<Failure> failures;
  std::map<ExperimentId, PlotSeries> plots;
};

RunRecord make_run_record(const std::vector<SeedOutcome>& outcomes, const std::vector<std::uint32_t>& seeds,
                          std::uint32_t viz_seed);

/// JSON document; NaN plot values are written as null.
void write_run_record(std::ostream& os, const RunRecord& record);
/// Throws ConfigError on malformed input.
RunRecord read_run_record(std::istream& is);

void save_run_record(const std::filesystem::path& path, const RunRecord& record);
RunRecord load_run_record(const std::filesystem::path& path);

}  // namespace vekua::cli
