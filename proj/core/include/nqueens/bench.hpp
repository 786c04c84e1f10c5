#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "nqueens/board.hpp"
#include "nqueens/parallel.hpp"
#include "nqueens/solver.hpp"

namespace nqueens::bench {

/// Board size -> number of timed trials.
using TrialSchedule = std::map<int, int>;

/// 20 trials for 8 <= n <= 15, 10 for 16 <= n <= 17, 3 for n = 18.
TrialSchedule default_trial_schedule();

/// Parses lines of "<n> <trials>". Blank lines and lines starting with '#'
/// are skipped. Throws ValidationError on malformed lines, n < 0,
/// trials < 1 or duplicate n.
TrialSchedule parse_trial_schedule(std::istream& in);
TrialSchedule load_trial_schedule(const std::filesystem::path& path);

struct BenchConfig {
  int min_n = 8;
  int max_n = 15;
  std::vector<Strategy> modes{Strategy::Sequential, Strategy::Para,
                              Strategy::Pool};
  TrialSchedule trial_schedule = default_trial_schedule();
  int warmup_runs = 1;
  int workers = default_workers();
  SolverVariant variant = SolverVariant::FixedCapacity;

  /// Throws ValidationError unless 0 <= min_n <= max_n, modes are nonempty
  /// and unique, every n in range has a trial count >= 1, warmup_runs >= 0
  /// and workers >= 1.
  void validate() const;
  int trials_for(int n) const;
  ExecutionMode mode(Strategy s) const { return {s, workers}; }
};

struct TrialRecord {
  int n = 0;
  Strategy mode = Strategy::Sequential;
  int trial = 0;
  double seconds = 0.0;
  SolutionCount count = 0;
};

struct BenchSummary {
  int n = 0;
  Strategy mode = Strategy::Sequential;
  int trials = 0;
  double mean_seconds = 0.0;
  double variance_seconds = 0.0;  // unbiased; 0 for a single trial
};

struct GrowthFactor {
  int n = 0;         // ratio compares n + 1 against n
  double ratio = 0;  // mean(n + 1) / mean(n)
};

using Counter = std::function<SolutionCount(BoardSize, ExecutionMode)>;
using ProgressFn = std::function<void(const TrialRecord&)>;

/// Times every (n, mode) cell: warmup runs first (not recorded), then the
/// scheduled trials back to back. Only the counting call is timed. Throws
/// IntegrityError if any run for a given n returns a different count.
std::vector<TrialRecord> run_bench(const BenchConfig& config,
                                   const ProgressFn& progress = {});
std::vector<TrialRecord> run_bench(const BenchConfig& config,
                                   const Counter& counter,
                                   const ProgressFn& progress = {});

/// One summary per (n, mode), ordered by n then mode.
std::vector<BenchSummary> summarize(std::span<const TrialRecord> records);

/// Ratios of consecutive means for one mode. Pairs with a gap in n are
/// omitted.
std::vector<GrowthFactor> growth_factors(std::span<const BenchSummary> summaries,
                                         Strategy mode);

// CSV / JSON persistence.
inline constexpr const char* kRecordsHeader = "n,mode,trial,seconds,count";
inline constexpr const char* kSummaryHeader =
    "n,mode,trials,mean_seconds,variance_seconds";

void write_records_csv(std::ostream& out, std::span<const TrialRecord> records);
void write_summary_csv(std::ostream& out,
                       std::span<const BenchSummary> summaries);
void write_summary_json(std::ostream& out, const BenchConfig& config,
                        std::span<const BenchSummary> summaries);

/// Reads a summary CSV. A per-trial CSV is also accepted and summarized.
/// Throws ValidationError on an unknown header or malformed row.
std::vector<BenchSummary> read_summary_csv(std::istream& in);
std::vector<BenchSummary> load_summary_csv(const std::filesystem::path& path);
std::vector<TrialRecord> read_records_csv(std::istream& in);

}  // namespace nqueens::bench
