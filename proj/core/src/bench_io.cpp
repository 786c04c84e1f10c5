#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nqueens/bench.hpp"
#include "nqueens/errors.hpp"

namespace nqueens::bench {
namespace {

std::string format_seconds(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

template <typename T>
T parse_number(const std::string& text, int lineno) {
  std::istringstream in(text);
  T v{};
  if (!(in >> v) || !(in >> std::ws).eof()) {
    throw ValidationError("CSV line " + std::to_string(lineno) +
                          ": bad number '" + text + "'");
  }
  return v;
}

}  // namespace

void write_records_csv(std::ostream& out, std::span<const TrialRecord> records) {
  out << kRecordsHeader << '\n';
  for (const auto& r : records) {
    out << r.n << ',' << to_string(r.mode) << ',' << r.trial << ','
        << format_seconds(r.seconds) << ',' << r.count << '\n';
  }
}

void write_summary_csv(std::ostream& out,
                       std::span<const BenchSummary> summaries) {
  out << kSummaryHeader << '\n';
  for (const auto& s : summaries) {
    out << s.n << ',' << to_string(s.mode) << ',' << s.trials << ','
        << format_seconds(s.mean_seconds) << ','
        << format_seconds(s.variance_seconds) << '\n';
  }
}

void write_summary_json(std::ostream& out, const BenchConfig& config,
                        std::span<const BenchSummary> summaries) {
  nlohmann::ordered_json doc;
  auto& cfg = doc["config"];
  cfg["min_n"] = config.min_n;
  cfg["max_n"] = config.max_n;
  cfg["modes"] = nlohmann::json::array();
  for (Strategy s : config.modes) cfg["modes"].push_back(std::string(to_string(s)));
  cfg["trials"] = nlohmann::ordered_json::object();
  for (int n = config.min_n; n <= config.max_n; ++n) {
    cfg["trials"][std::to_string(n)] = config.trials_for(n);
  }
  cfg["warmup_runs"] = config.warmup_runs;
  cfg["workers"] = config.workers;
  cfg["variant"] = config.variant == SolverVariant::FixedCapacity ? "fixed"
                                                                  : "dynamic";
  auto& arr = doc["summaries"] = nlohmann::ordered_json::array();
  for (const auto& s : summaries) {
    nlohmann::ordered_json row;
    row["n"] = s.n;
    row["mode"] = std::string(to_string(s.mode));
    row["trials"] = s.trials;
    row["mean_seconds"] = s.mean_seconds;
    row["variance_seconds"] = s.variance_seconds;
    arr.push_back(std::move(row));
  }
  out << doc.dump(2) << '\n';
}

std::vector<TrialRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kRecordsHeader) {
    throw ValidationError(std::string("expected CSV header '") +
                          kRecordsHeader + "'");
  }
  std::vector<TrialRecord> out;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 5) {
      throw ValidationError("CSV line " + std::to_string(lineno) +
                            ": expected 5 fields");
    }
    out.push_back({parse_number<int>(f[0], lineno), parse_strategy(f[1]),
                   parse_number<int>(f[2], lineno),
                   parse_number<double>(f[3], lineno),
                   parse_number<SolutionCount>(f[4], lineno)});
  }
  return out;
}

std::vector<BenchSummary> read_summary_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ValidationError("empty CSV input");
  header = strip_cr(header);
  if (header == kRecordsHeader) {
    std::stringstream rest;
    rest << header << '\n';
    if (in.peek() != std::char_traits<char>::eof()) rest << in.rdbuf();
    const auto records = read_records_csv(rest);
    return summarize(records);
  }
  if (header != kSummaryHeader) {
    throw ValidationError("unrecognised CSV header '" + header + "'");
  }
  std::vector<BenchSummary> out;
  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 5) {
      throw ValidationError("CSV line " + std::to_string(lineno) +
                            ": expected 5 fields");
    }
    out.push_back({parse_number<int>(f[0], lineno), parse_strategy(f[1]),
                   parse_number<int>(f[2], lineno),
                   parse_number<double>(f[3], lineno),
                   parse_number<double>(f[4], lineno)});
  }
  return out;
}

std::vector<BenchSummary> load_summary_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_summary_csv(in);
}

}  // namespace nqueens::bench
