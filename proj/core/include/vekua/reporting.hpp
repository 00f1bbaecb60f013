#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vekua/experiments.hpp"

namespace vekua {

/// One formatted table line. `experiment_label` is empty on SIREN rows
/// (continuation of the Vekua row above it).
struct ReportRow {
  ExperimentId experiment = ExperimentId::A;
  std::string experiment_label;
  std::string method;
  std::string time;  // "%.4f ± %.4f"
  std::string mse;   // "%.2e ± %.2e"
};

std::string format_time_cell(const MeanStd& seconds);
std::string format_mse_cell(const MeanStd& mse);

std::vector<ReportRow> make_report_rows(const std::vector<SummaryRow>& summary);

/// Right-aligned fixed-width columns separated by one space, framed by the
/// "BENCHMARK RESULTS (Mean ± Std over N Seeds)" banner. With no rows only
/// the header line is printed inside the frame.
std::string render_text_table(const std::vector<ReportRow>& rows, std::size_t seed_count = 3);

/// "4.10e-33 ± 0.00e+00" -> "4.10 \times 10^{-33 } \pm  0.00 \times 10^{0}".
/// Replacement rules, in order: 'e' -> " \times 10^{", '±' -> "} \pm ",
/// append '}', then "+00}" -> "0}" and "{-0" -> "{-".
std::string latex_scientific(const std::string& mse_cell);

/// booktabs tabular, one \midrule after each experiment's rows.
std::string render_latex_table(const std::vector<ReportRow>& rows);

/// Columns of a per-experiment plot export.
struct PlotSeries {
  std::vector<double> x;
  std::vector<double> truth;
  std::vector<double> vekua;
  std::vector<double> siren;  // NaN when SIREN did not run
  std::optional<std::vector<double>> noisy;
};

/// Plot columns for one outcome, truncated to `max_rows` when positive.
PlotSeries make_plot_series(const SeedOutcome& outcome, int max_rows = 0);

/// Header "x,truth,vekua_pred,siren_pred[,noisy_sample]", then comma-separated
/// rows with 17 significant digits.
void write_plot_csv(std::ostream& os, const PlotSeries& series);
/// Throws ConfigError on a malformed file.
PlotSeries read_plot_csv(std::istream& is);

/// Writes <dir>/<id>.csv for every experiment that has an outcome at
/// `viz_seed`; B keeps only its first 50 rows (the first hidden edge).
/// Returns the written paths.
std::vector<std::filesystem::path> export_plot_data(const std::vector<SeedOutcome>& outcomes,
                                                    std::uint32_t viz_seed,
                                                    const std::filesystem::path& dir);

/// Writes <dir>/summary.txt and <dir>/summary.tex.
void write_summary_files(const std::vector<ReportRow>& rows, std::size_t seed_count,
                         const std::filesystem::path& dir);

}  // namespace vekua
