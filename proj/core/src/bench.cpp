#include "nqueens/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "nqueens/errors.hpp"

namespace nqueens::bench {

TrialSchedule default_trial_schedule() {
  TrialSchedule s;
  for (int n = 8; n <= 15; ++n) s[n] = 20;
  s[16] = 10;
  s[17] = 10;
  s[18] = 3;
  return s;
}

TrialSchedule parse_trial_schedule(std::istream& in) {
  TrialSchedule s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    int n = 0, trials = 0;
    std::string extra;
    if (!(fields >> n >> trials) || (fields >> extra)) {
      throw ValidationError("trials file line " + std::to_string(lineno) +
                            ": expected '<n> <trials>'");
    }
    if (n < 0 || trials < 1) {
      throw ValidationError("trials file line " + std::to_string(lineno) +
                            ": need n >= 0 and trials >= 1");
    }
    if (!s.emplace(n, trials).second) {
      throw ValidationError("trials file line " + std::to_string(lineno) +
                            ": duplicate entry for n = " + std::to_string(n));
    }
  }
  return s;
}

TrialSchedule load_trial_schedule(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open trials file " + path.string());
  return parse_trial_schedule(in);
}

void BenchConfig::validate() const {
  if (min_n < 0 || min_n > max_n) {
    throw ValidationError("need 0 <= min_n <= max_n, got " +
                          std::to_string(min_n) + ".." + std::to_string(max_n));
  }
  if (modes.empty()) throw ValidationError("no benchmark modes selected");
  if (std::set<Strategy>(modes.begin(), modes.end()).size() != modes.size()) {
    throw ValidationError("benchmark modes must be unique");
  }
  if (warmup_runs < 0) throw ValidationError("warmup_runs must be >= 0");
  if (workers < 1) throw ValidationError("workers must be >= 1");
  for (int n = min_n; n <= max_n; ++n) {
    auto it = trial_schedule.find(n);
    if (it == trial_schedule.end() || it->second < 1) {
      throw ValidationError("trial schedule has no entry for n = " +
                            std::to_string(n));
    }
  }
}

int BenchConfig::trials_for(int n) const {
  auto it = trial_schedule.find(n);
  return it == trial_schedule.end() ? 0 : it->second;
}

std::vector<TrialRecord> run_bench(const BenchConfig& config,
                                   const ProgressFn& progress) {
  const auto variant = config.variant;
  return run_bench(
      config,
      [variant](BoardSize n, ExecutionMode mode) {
        RunOptions options;
        options.variant = variant;
        return count_parallel(n, mode, options);
      },
      progress);
}

std::vector<TrialRecord> run_bench(const BenchConfig& config,
                                   const Counter& counter,
                                   const ProgressFn& progress) {
  config.validate();
  using Clock = std::chrono::steady_clock;
  std::vector<TrialRecord> records;
  for (int n = config.min_n; n <= config.max_n; ++n) {
    const BoardSize size(n);
    std::optional<SolutionCount> expected;
    auto check = [&](SolutionCount got, Strategy s) {
      if (!expected) {
        expected = got;
      } else if (got != *expected) {
        throw IntegrityError("n = " + std::to_string(n) + " mode " +
                             std::string(to_string(s)) + " returned " +
                             std::to_string(got) + ", earlier runs returned " +
                             std::to_string(*expected));
      }
    };
    for (Strategy s : config.modes) {
      const ExecutionMode mode = config.mode(s);
      for (int w = 0; w < config.warmup_runs; ++w) check(counter(size, mode), s);
      for (int t = 0; t < config.trials_for(n); ++t) {
        const auto start = Clock::now();
        const SolutionCount count = counter(size, mode);
        const auto stop = Clock::now();
        check(count, s);
        // Tiny boards can finish within one clock tick.
        const double seconds =
            std::max(std::chrono::duration<double>(stop - start).count(), 1e-9);
        records.push_back({n, s, t, seconds, count});
        if (progress) progress(records.back());
      }
    }
  }
  return records;
}

std::vector<BenchSummary> summarize(std::span<const TrialRecord> records) {
  std::map<std::pair<int, Strategy>, std::vector<double>> groups;
  for (const auto& r : records) groups[{r.n, r.mode}].push_back(r.seconds);

  std::vector<BenchSummary> out;
  for (const auto& [key, times] : groups) {
    if (times.empty()) continue;
    const double k = static_cast<double>(times.size());
    double mean = 0.0;
    for (double t : times) mean += t;
    mean /= k;
    double ss = 0.0;
    for (double t : times) ss += (t - mean) * (t - mean);
    const double variance = times.size() > 1 ? ss / (k - 1.0) : 0.0;
    out.push_back({key.first, key.second, static_cast<int>(times.size()), mean,
                   variance});
  }
  return out;
}

std::vector<GrowthFactor> growth_factors(std::span<const BenchSummary> summaries,
                                         Strategy mode) {
  std::map<int, double> means;
  for (const auto& s : summaries) {
    if (s.mode == mode) means[s.n] = s.mean_seconds;
  }
  std::vector<GrowthFactor> out;
  for (auto it = means.begin(); it != means.end(); ++it) {
    auto next = std::next(it);
    if (next == means.end()) break;
    if (next->first != it->first + 1) continue;
    out.push_back({it->first, next->second / it->second});
  }
  return out;
}

}  // namespace nqueens::bench
