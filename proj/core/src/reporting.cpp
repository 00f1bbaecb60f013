#include "vekua/reporting.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "vekua/errors.hpp"

namespace vekua {
namespace {

constexpr std::string_view kPlusMinus = "\u00b1";

// Column width in characters; every cell is ASCII apart from '±'.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad_left(std::string_view s, std::size_t width) {
  const std::size_t w = display_width(s);
  return std::string(width > w ? width - w : 0, ' ') + std::string(s);
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

std::string rule() { return std::string(80, '=') + "\n"; }

}  // namespace

std::string format_time_cell(const MeanStd& seconds) {
  return fmt::format("{:.4f} {} {:.4f}", seconds.mean, kPlusMinus, seconds.std);
}

std::string format_mse_cell(const MeanStd& mse) {
  return fmt::format("{:.2e} {} {:.2e}", mse.mean, kPlusMinus, mse.std);
}

std::vector<ReportRow> make_report_rows(const std::vector<SummaryRow>& summary) {
  std::vector<ReportRow> rows;
  for (const SummaryRow& s : summary) {
    ReportRow r;
    r.experiment = s.experiment;
    r.experiment_label = s.method == Method::Vekua ? std::string(display_name(s.experiment)) : "";
    r.method = std::string(to_string(s.method));
    r.time = format_time_cell(s.seconds);
    r.mse = format_mse_cell(s.mse);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string render_text_table(const std::vector<ReportRow>& rows, std::size_t seed_count) {
  const std::array<std::string_view, 4> headers{"Experiment", "Method", "Time (s)", "MSE"};
  std::array<std::size_t, 4> widths{};
  for (std::size_t c = 0; c < headers.size(); ++c) {
    widths[c] = display_width(headers[c]);
  }
  for (const ReportRow& r : rows) {
    widths[0] = std::max(widths[0], display_width(r.experiment_label));
    widths[1] = std::max(widths[1], display_width(r.method));
    widths[2] = std::max(widths[2], display_width(r.time));
    widths[3] = std::max(widths[3], display_width(r.mse));
  }
  auto line = [&](std::string_view a, std::string_view b, std::string_view c, std::string_view d) {
    return pad_left(a, widths[0]) + " " + pad_left(b, widths[1]) + " " + pad_left(c, widths[2]) +
           " " + pad_left(d, widths[3]) + "\n";
  };

  std::string out = rule();
  out += fmt::format("BENCHMARK RESULTS (Mean {} Std over {} Seeds)\n", kPlusMinus, seed_count);
  out += rule();
  out += line(headers[0], headers[1], headers[2], headers[3]);
  for (const ReportRow& r : rows) {
    out += line(r.experiment_label, r.method, r.time, r.mse);
  }
  out += rule();
  return out;
}

std::string latex_scientific(const std::string& mse_cell) {
  std::string s = mse_cell;
  replace_all(s, "e", R"( \times 10^{)");
  replace_all(s, kPlusMinus, R"(} \pm )");
  s += "}";
  replace_all(s, "+00}", "0}");
  replace_all(s, "{-0", "{-");
  return s;
}

std::string render_latex_table(const std::vector<ReportRow>& rows) {
  std::string out;
  out += "\\begin{table}[h]\n";
  out += "\\centering\n";
  out += "\\begin{tabular}{lccc}\n";
  out += "\\toprule\n";
  out += "Experiment & Method & Time (s) & MSE \\\\\n";
  out += "\\midrule\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ReportRow& r = rows[i];
    std::string time = r.time;
    replace_all(time, kPlusMinus, "$\\pm$");
    out += fmt::format("{} & {} & {} & ${}$ \\\\\n", r.experiment_label, r.method, time,
                       latex_scientific(r.mse));
    const bool group_ends = i + 1 == rows.size() || rows[i + 1].experiment != r.experiment;
    if (group_ends) {
      out += "\\midrule\n";
    }
  }
  out += "\\bottomrule\n";
  out += "\\end{tabular}\n";
  out += "\\caption{Comparison of Vekua Layer vs SIREN across 4 physics tasks.}\n";
  out += "\\label{tab:results}\n";
  out += "\\end{table}\n";
  return out;
}

PlotSeries make_plot_series(const SeedOutcome& outcome, int max_rows) {
  PlotSeries s;
  const ExperimentResult* reference = outcome.vekua ? &*outcome.vekua : (outcome.siren ? &*outcome.siren : nullptr);
  if (!reference) {
    return s;
  }
  const std::size_t full = reference->test_line.x.size();
  const std::size_t n = max_rows > 0 ? std::min(full, static_cast<std::size_t>(max_rows)) : full;
  auto head = [n](const std::vector<double>& v) { return std::vector<double>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))); };
  const std::vector<double> missing(n, std::numeric_limits<double>::quiet_NaN());

  s.x = head(reference->test_line.x);
  s.truth = head(reference->test_line.truth);
  s.vekua = outcome.vekua ? head(outcome.vekua->test_line.prediction) : missing;
  s.siren = outcome.siren ? head(outcome.siren->test_line.prediction) : missing;
  if (!outcome.noisy_line.empty()) {
    s.noisy = head(outcome.noisy_line);
  }
  return s;
}

void write_plot_csv(std::ostream& os, const PlotSeries& series) {
  const std::size_t n = series.x.size();
  if (series.truth.size() != n || series.vekua.size() != n || series.siren.size() != n ||
      (series.noisy && series.noisy->size() != n)) {
    throw DomainError("plot export: column lengths differ");
  }
  os << "x,truth,vekua_pred,siren_pred" << (series.noisy ? ",noisy_sample" : "") << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    fmt::print(os, "{:.17g},{:.17g},{:.17g},{:.17g}", series.x[i], series.truth[i], series.vekua[i],
               series.siren[i]);
    if (series.noisy) {
      fmt::print(os, ",{:.17g}", (*series.noisy)[i]);
    }
    os << '\n';
  }
}

PlotSeries read_plot_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) {
    throw ConfigError("plot csv: missing header");
  }
  bool has_noisy = false;
  if (line == "x,truth,vekua_pred,siren_pred,noisy_sample") {
    has_noisy = true;
  } else if (line != "x,truth,vekua_pred,siren_pred") {
    throw ConfigError("plot csv: unexpected header '" + line + "'");
  }
  PlotSeries s;
  if (has_noisy) {
    s.noisy.emplace();
  }
  const std::size_t n_columns = has_noisy ? 5 : 4;
  while (std::getline(is, line)) {
    if (line.empty()) {
      continue;
    }
    std::vector<double> values;
    std::size_t begin = 0;
    while (begin <= line.size()) {
      const std::size_t end = std::min(line.find(',', begin), line.size());
      double v = 0.0;
      const char* first = line.data() + begin;
      const char* last = line.data() + end;
      const auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last) {
        throw ConfigError("plot csv: bad value in row '" + line + "'");
      }
      values.push_back(v);
      begin = end + 1;
    }
    if (values.size() != n_columns) {
      throw ConfigError("plot csv: wrong column count in row '" + line + "'");
    }
    s.x.push_back(values[0]);
    s.truth.push_back(values[1]);
    s.vekua.push_back(values[2]);
    s.siren.push_back(values[3]);
    if (has_noisy) {
      s.noisy->push_back(values[4]);
    }
  }
  return s;
}

std::vector<std::filesystem::path> export_plot_data(const std::vector<SeedOutcome>& outcomes,
                                                    std::uint32_t viz_seed,
                                                    const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const SeedOutcome& o : outcomes) {
    if (o.seed != viz_seed || (!o.vekua && !o.siren)) {
      continue;
    }
    const std::filesystem::path path = dir / fmt::format("{}.csv", to_char(o.experiment));
    std::ofstream os(path, std::ios::binary);
    if (!os) {
      throw ConfigError("cannot open " + path.string() + " for writing");
    }
    write_plot_csv(os, make_plot_series(o, default_config(o.experiment).plot_rows));
    written.push_back(path);
  }
  return written;
}

void write_summary_files(const std::vector<ReportRow>& rows, std::size_t seed_count,
                         const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
      throw ConfigError("cannot open " + path.string() + " for writing");
    }
    os << text;
  };
  write(dir / "summary.txt", render_text_table(rows, seed_count));
  write(dir / "summary.tex", render_latex_table(rows));
}

}  // namespace vekua
