#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nqueens/board.hpp"
#include "nqueens/solver.hpp"

namespace nqueens {

/// How the first-row decomposition is executed.
///   Sequential  the whole search on the calling thread
///   Para        parallel loop over first-row columns; contiguous blocks of
///               columns per worker, partial sums reduced at the end
///   Pool        fixed worker pool pulling one task per column from a FIFO
enum class Strategy { Sequential, Para, Pool };

std::string_view to_string(Strategy s) noexcept;
/// Accepts "seq"/"sequential", "para", "pool". Throws ValidationError.
Strategy parse_strategy(std::string_view text);

/// Detected hardware parallelism, at least 1.
int default_workers() noexcept;

struct ExecutionMode {
  Strategy strategy = Strategy::Sequential;
  int workers = 1;  // ignored for Sequential

  /// Throws ValidationError when a parallel strategy has workers < 1.
  void validate() const;

  bool operator==(const ExecutionMode&) const = default;
};

struct TaskResult {
  int column = 0;
  SolutionCount count = 0;

  bool operator==(const TaskResult&) const = default;
};

/// Scheduling observations from one run.
struct RunTrace {
  std::vector<int> start_order;               // columns in task-start order
  std::vector<std::size_t> tasks_per_worker;  // indexed by worker
};

/// Work performed for one first-row column. Replaceable for testing.
using ColumnTask = std::function<SolutionCount(BoardSize n, int column)>;

struct RunOptions {
  SolverVariant variant = SolverVariant::FixedCapacity;
  RunTrace* trace = nullptr;
  ColumnTask task;  // empty: private-state backtracking subsearch
};

/// One result per first-row column, sorted by column. A throwing task is
/// reported as TaskFailure naming its column. Requires n >= 1.
std::vector<TaskResult> collect_task_results(BoardSize n, ExecutionMode mode,
                                             const RunOptions& options = {});

/// Total solution count under `mode`. Identical to count_all_solutions(n)
/// for every strategy and worker count. n = 0 returns 1 without splitting.
SolutionCount count_parallel(BoardSize n, ExecutionMode mode,
                             const RunOptions& options = {});

}  // namespace nqueens
