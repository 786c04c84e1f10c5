#include "nqueens/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "nqueens/errors.hpp"

namespace nqueens::report {
namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 440;
constexpr double kLeft = 90;
constexpr double kRight = 150;
constexpr double kTop = 50;
constexpr double kBottom = 60;

constexpr const char* kPalette[] = {"#2ca02c", "#d62728", "#1f77b4",
                                    "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string coord(double v) { return fmt("%.2f", v); }

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double transform(double v, Scale scale) {
  return scale == Scale::Log10 ? std::log10(v) : v;
}

}  // namespace

Scale parse_scale(std::string_view text) {
  if (text == "linear") return Scale::Linear;
  if (text == "log" || text == "log10") return Scale::Log10;
  throw ValidationError("unknown scale '" + std::string(text) +
                        "' (expected linear or log)");
}

void ChartSpec::validate() const {
  if (series.empty()) throw ValidationError("chart has no series");
  for (const auto& s : series) {
    if (s.points.empty()) {
      throw ValidationError("chart series '" + s.label + "' has no points");
    }
    if (scale == Scale::Log10) {
      for (const auto& p : s.points) {
        if (!(p.seconds > 0.0)) {
          throw ValidationError("log-scale chart needs positive values; series '" +
                                s.label + "' has " + fmt("%g", p.seconds) +
                                " at n = " + std::to_string(p.n));
        }
      }
    }
  }
}

ChartSpec chart_from_summaries(std::span<const bench::BenchSummary> summaries,
                               Scale scale, std::string title) {
  std::map<Strategy, std::vector<ChartPoint>> by_mode;
  for (const auto& s : summaries) by_mode[s.mode].push_back({s.n, s.mean_seconds});
  ChartSpec spec;
  spec.scale = scale;
  spec.title = std::move(title);
  for (auto& [mode, points] : by_mode) {
    std::sort(points.begin(), points.end(),
              [](const ChartPoint& a, const ChartPoint& b) { return a.n < b.n; });
    spec.series.push_back({std::string(to_string(mode)), std::move(points)});
  }
  return spec;
}

std::string render_chart_svg(const ChartSpec& spec) {
  spec.validate();

  int n_lo = std::numeric_limits<int>::max();
  int n_hi = std::numeric_limits<int>::min();
  double y_lo = std::numeric_limits<double>::infinity();
  double y_hi = -y_lo;
  for (const auto& s : spec.series) {
    for (const auto& p : s.points) {
      n_lo = std::min(n_lo, p.n);
      n_hi = std::max(n_hi, p.n);
      const double y = transform(p.seconds, spec.scale);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (n_lo == n_hi) {
    --n_lo;
    ++n_hi;
  }

  // Axis range and tick positions in transformed units.
  std::vector<std::pair<double, std::string>> y_ticks;
  if (spec.scale == Scale::Log10) {
    y_lo = std::floor(y_lo);
    y_hi = std::ceil(y_hi);
    if (y_lo == y_hi) y_hi += 1;
    for (double d = y_lo; d <= y_hi; d += 1) {
      y_ticks.emplace_back(d, "1e" + std::to_string(static_cast<int>(d)));
    }
  } else {
    y_lo = std::min(0.0, y_lo);
    if (y_hi <= y_lo) y_hi = y_lo + 1;
    for (int k = 0; k <= 5; ++k) {
      const double v = y_lo + (y_hi - y_lo) * k / 5.0;
      y_ticks.emplace_back(v, fmt("%.4g", v));
    }
  }

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](int n) {
    return kLeft + plot_w * (n - n_lo) / static_cast<double>(n_hi - n_lo);
  };
  auto py = [&](double y) {
    return kTop + plot_h * (1.0 - (y - y_lo) / (y_hi - y_lo));
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << coord(kLeft + plot_w / 2) << "\" y=\"24\" "
      << "text-anchor=\"middle\" font-size=\"15\">" << xml_escape(spec.title)
      << "</text>\n";

  // Axes.
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(kTop + plot_h)
      << "\" x2=\"" << coord(kLeft + plot_w) << "\" y2=\""
      << coord(kTop + plot_h) << "\"/>\n"
      << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(kTop)
      << "\" x2=\"" << coord(kLeft) << "\" y2=\"" << coord(kTop + plot_h)
      << "\"/>\n</g>\n";

  svg << "<g class=\"x-ticks\" text-anchor=\"middle\">\n";
  for (int n = n_lo; n <= n_hi; ++n) {
    const std::string x = coord(px(n));
    svg << "<line x1=\"" << x << "\" y1=\"" << coord(kTop + plot_h) << "\" x2=\""
        << x << "\" y2=\"" << coord(kTop + plot_h + 5) << "\" stroke=\"black\"/>"
        << "<text x=\"" << x << "\" y=\"" << coord(kTop + plot_h + 20) << "\">"
        << n << "</text>\n";
  }
  svg << "</g>\n<g class=\"y-ticks\" text-anchor=\"end\">\n";
  for (const auto& [v, label] : y_ticks) {
    const std::string y = coord(py(v));
    svg << "<line x1=\"" << coord(kLeft - 5) << "\" y1=\"" << y << "\" x2=\""
        << coord(kLeft + plot_w) << "\" y2=\"" << y
        << "\" stroke=\"#dddddd\"/>"
        << "<text x=\"" << coord(kLeft - 8) << "\" y=\"" << coord(py(v) + 4)
        << "\">" << xml_escape(label) << "</text>\n";
  }
  svg << "</g>\n";

  svg << "<text x=\"" << coord(kLeft + plot_w / 2) << "\" y=\""
      << coord(kHeight - 15) << "\" text-anchor=\"middle\">"
      << xml_escape(spec.x_label) << "</text>\n"
      << "<text transform=\"translate(20 " << coord(kTop + plot_h / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">"
      << xml_escape(spec.y_label)
      << (spec.scale == Scale::Log10 ? " (log scale)" : "") << "</text>\n";

  constexpr std::size_t kColors = std::size(kPalette);
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const auto& s = spec.series[i];
    svg << "<polyline fill=\"none\" stroke=\"" << kPalette[i % kColors]
        << "\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      if (k) svg << ' ';
      svg << coord(px(s.points[k].n)) << ','
          << coord(py(transform(s.points[k].seconds, spec.scale)));
    }
    svg << "\"/>\n";
  }

  svg << "<g class=\"legend\">\n";
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const double y = kTop + 10 + 20.0 * static_cast<double>(i);
    const double x = kLeft + plot_w + 15;
    svg << "<rect x=\"" << coord(x) << "\" y=\"" << coord(y - 8)
        << "\" width=\"14\" height=\"4\" fill=\"" << kPalette[i % kColors]
        << "\"/><text x=\"" << coord(x + 20) << "\" y=\"" << coord(y - 2)
        << "\">" << xml_escape(spec.series[i].label) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void emit_chart(const ChartSpec& spec, const std::filesystem::path& path) {
  const std::string svg = render_chart_svg(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << svg;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<double> log_slope_ratios(std::span<const ChartPoint> points) {
  std::vector<double> increments;
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (points[k].n != points[k - 1].n + 1) {
      throw ValidationError("log_slope_ratios needs consecutive n");
    }
    increments.push_back(std::log10(points[k].seconds) -
                         std::log10(points[k - 1].seconds));
  }
  std::vector<double> ratios;
  for (std::size_t k = 1; k < increments.size(); ++k) {
    ratios.push_back(increments[k] / increments[k - 1]);
  }
  return ratios;
}

std::string emit_table(std::span<const bench::BenchSummary> summaries) {
  std::map<int, std::map<Strategy, double>> cells;
  std::vector<Strategy> modes;
  for (const auto& s : summaries) {
    cells[s.n][s.mode] = s.mean_seconds;
    if (std::find(modes.begin(), modes.end(), s.mode) == modes.end()) {
      modes.push_back(s.mode);
    }
  }
  std::sort(modes.begin(), modes.end());

  // rows[0] is the header.
  std::vector<std::vector<std::string>> rows(modes.size() + 1);
  rows[0].push_back("mode");
  for (std::size_t r = 0; r < modes.size(); ++r) {
    rows[r + 1].push_back(std::string(to_string(modes[r])));
  }
  for (const auto& [n, by_mode] : cells) {
    rows[0].push_back(std::to_string(n));
    Strategy fastest = by_mode.begin()->first;
    for (const auto& [m, v] : by_mode) {
      if (v < by_mode.at(fastest)) fastest = m;
    }
    for (std::size_t r = 0; r < modes.size(); ++r) {
      auto it = by_mode.find(modes[r]);
      if (it == by_mode.end()) {
        rows[r + 1].push_back("-");
        continue;
      }
      std::string cell = fmt("%.6g", it->second);
      if (by_mode.size() > 1 && modes[r] == fastest) cell += '*';
      rows[r + 1].push_back(std::move(cell));
    }
  }

  std::vector<std::size_t> widths(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      if (c == 0) {
        out << std::left << std::setw(static_cast<int>(widths[c])) << row[c];
      } else {
        out << std::right << std::setw(static_cast<int>(widths[c])) << row[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string render_board(const Placement& p) {
  const int n = p.size();
  std::string out;
  out.reserve(static_cast<std::size_t>(n) * (n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out += (p.columns[i] == j ? 'Q' : '.');
    if (i + 1 < n) out += '\n';
  }
  return out;
}

Placement parse_board(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  Placement p;
  const std::size_t n = lines.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto line = lines[i];
    if (line.size() != n) {
      throw ValidationError("board row " + std::to_string(i) + " has width " +
                            std::to_string(line.size()) + ", expected " +
                            std::to_string(n));
    }
    if (line.find_first_not_of("Q.") != std::string_view::npos ||
        std::count(line.begin(), line.end(), 'Q') != 1) {
      throw ValidationError("board row " + std::to_string(i) +
                            " must contain one 'Q' and otherwise '.'");
    }
    p.columns.push_back(static_cast<int>(line.find('Q')));
  }
  return p;
}

}  // namespace nqueens::report
