#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nqueens/bench.hpp"
#include "nqueens/board.hpp"

namespace nqueens::report {

enum class Scale { Linear, Log10 };

/// Accepts "linear", "log" or "log10". Throws ValidationError.
Scale parse_scale(std::string_view text);

struct ChartPoint {
  int n = 0;
  double seconds = 0.0;
};

struct ChartSeries {
  std::string label;
  std::vector<ChartPoint> points;
};

struct ChartSpec {
  Scale scale = Scale::Linear;
  std::vector<ChartSeries> series;
  std::string title;
  std::string x_label = "board size n";
  std::string y_label = "mean seconds per trial";

  /// Throws ValidationError if there are no series, a series is empty, or
  /// a log-scale chart has a nonpositive value.
  void validate() const;
};

/// One series per mode, points ordered by n.
ChartSpec chart_from_summaries(std::span<const bench::BenchSummary> summaries,
                               Scale scale, std::string title = "Run time vs board size");

/// Self-contained SVG: axes, tick labels, one polyline per series and a
/// legend. Output depends only on the spec.
std::string render_chart_svg(const ChartSpec& spec);

/// Writes render_chart_svg(spec) to `path`. Throws IoError if the file
/// cannot be written.
void emit_chart(const ChartSpec& spec, const std::filesystem::path& path);

/// Ratios of consecutive log10 increments of a series: for means m(n),
/// d(n) = log10 m(n+1) - log10 m(n) and the result holds d(n+1) / d(n).
/// A straight line on a log plot gives ratios of 1. Requires consecutive n.
std::vector<double> log_slope_ratios(std::span<const ChartPoint> points);

/// Text table with one row per mode and one column per n. Cells show mean
/// seconds to 6 significant digits; the fastest cell of each column is
/// suffixed with '*'.
std::string emit_table(std::span<const bench::BenchSummary> summaries);

/// n lines of n characters: 'Q' for a queen, '.' otherwise.
std::string render_board(const Placement& p);

/// Inverse of render_board. Throws ValidationError unless the text is a
/// square grid with exactly one 'Q' per row.
Placement parse_board(std::string_view text);

}  // namespace nqueens::report
