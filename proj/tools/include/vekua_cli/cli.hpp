#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vekua/experiments.hpp"

namespace vekua::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind vekua-bench. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Prints one line per failed (experiment, seed, method) to err and returns
/// kExitFailure if there were any, kExitOk otherwise.
int report_failures(const std::vector<SeedOutcome>& outcomes, std::ostream& err);

}  // namespace vekua::cli
