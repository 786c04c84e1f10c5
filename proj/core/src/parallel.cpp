#include "nqueens/parallel.hpp"

#include <algorithm>
#include <cassert>
#include <exception>
#include <future>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include "nqueens/errors.hpp"
#include "nqueens/occupancy.hpp"
#include "nqueens/thread_pool.hpp"

namespace nqueens {
namespace {

#ifndef NDEBUG
// Debug builds track live search states so two tasks can never share one.
class LiveStates {
 public:
  void acquire(const void* id) {
    std::lock_guard lock(mutex_);
    [[maybe_unused]] const bool inserted = ids_.insert(id).second;
    assert(inserted && "occupancy state shared between tasks");
  }
  void release(const void* id) {
    std::lock_guard lock(mutex_);
    ids_.erase(id);
  }

 private:
  std::mutex mutex_;
  std::set<const void*> ids_;
};

LiveStates& live_states() {
  static LiveStates registry;
  return registry;
}
#endif

class StateGuard {
 public:
  explicit StateGuard([[maybe_unused]] const void* id) : id_(id) {
#ifndef NDEBUG
    live_states().acquire(id_);
#endif
  }
  ~StateGuard() {
#ifndef NDEBUG
    live_states().release(id_);
#endif
  }
  StateGuard(const StateGuard&) = delete;
  StateGuard& operator=(const StateGuard&) = delete;

 private:
  const void* id_;
};

template <typename State>
SolutionCount private_subsearch(BoardSize n, int column) {
  State state(n);
  StateGuard guard(state.storage_id());
  state.place(0, column);
  return count_from_row(n, 1, state);
}

ColumnTask make_task(const RunOptions& options) {
  if (options.task) return options.task;
  if (options.variant == SolverVariant::FixedCapacity) {
    return private_subsearch<FixedOccupancy>;
  }
  return private_subsearch<OccupancyState>;
}

// Records task starts when a trace is requested.
class TraceRecorder {
 public:
  TraceRecorder(RunTrace* trace, std::size_t workers) : trace_(trace) {
    if (trace_) {
      trace_->start_order.clear();
      trace_->tasks_per_worker.assign(workers, 0);
    }
  }
  void started(int column, std::size_t worker) {
    if (!trace_) return;
    std::lock_guard lock(mutex_);
    trace_->start_order.push_back(column);
    if (worker < trace_->tasks_per_worker.size()) {
      ++trace_->tasks_per_worker[worker];
    }
  }

 private:
  RunTrace* trace_;
  std::mutex mutex_;
};

struct Failure {
  int column;
  std::string what;
};

std::string describe(std::exception_ptr ep) {
  try {
    std::rethrow_exception(ep);
  } catch (const std::exception& e) {
    return e.what();
  } catch (...) {
    return "unknown exception";
  }
}

std::vector<TaskResult> run_sequential(BoardSize n, const ColumnTask& task,
                                       TraceRecorder& rec) {
  std::vector<TaskResult> out;
  out.reserve(static_cast<std::size_t>(n.value()));
  for (int j = 0; j < n.value(); ++j) {
    rec.started(j, 0);
    try {
      out.push_back({j, task(n, j)});
    } catch (...) {
      throw TaskFailure(j, describe(std::current_exception()));
    }
  }
  return out;
}

std::vector<TaskResult> run_para(BoardSize n, int workers,
                                 const ColumnTask& task, TraceRecorder& rec) {
  const int tasks = n.value();
  const int used = std::min(workers, tasks);
  std::vector<TaskResult> out(static_cast<std::size_t>(tasks));
  std::vector<std::optional<Failure>> failures(static_cast<std::size_t>(used));
  {
    std::vector<std::jthread> threads;
    threads.reserve(static_cast<std::size_t>(used));
    for (int w = 0; w < used; ++w) {
      const int begin = static_cast<int>(static_cast<long>(w) * tasks / used);
      const int end = static_cast<int>(static_cast<long>(w + 1) * tasks / used);
      threads.emplace_back([&, w, begin, end] {
        for (int j = begin; j < end; ++j) {
          rec.started(j, static_cast<std::size_t>(w));
          try {
            out[j] = {j, task(n, j)};
          } catch (...) {
            failures[w] = Failure{j, describe(std::current_exception())};
            return;
          }
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) throw TaskFailure(f->column, f->what);
  }
  return out;
}

std::vector<TaskResult> run_pool(BoardSize n, int workers,
                                 const ColumnTask& task, TraceRecorder& rec) {
  ThreadPool pool(static_cast<std::size_t>(workers));
  std::vector<std::future<SolutionCount>> pending;
  pending.reserve(static_cast<std::size_t>(n.value()));
  for (int j = 0; j < n.value(); ++j) {
    pending.push_back(pool.submit([&, j] {
      rec.started(j, pool.current_worker());
      return task(n, j);
    }));
  }
  std::vector<TaskResult> out;
  out.reserve(pending.size());
  std::optional<Failure> failure;
  for (int j = 0; j < n.value(); ++j) {
    try {
      out.push_back({j, pending[j].get()});
    } catch (...) {
      if (!failure) failure = Failure{j, describe(std::current_exception())};
    }
  }
  if (failure) throw TaskFailure(failure->column, failure->what);
  return out;
}

}  // namespace

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Sequential:
      return "seq";
    case Strategy::Para:
      return "para";
    case Strategy::Pool:
      return "pool";
  }
  return "?";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "seq" || text == "sequential") return Strategy::Sequential;
  if (text == "para") return Strategy::Para;
  if (text == "pool") return Strategy::Pool;
  throw ValidationError("unknown mode '" + std::string(text) +
                        "' (expected seq, para or pool)");
}

int default_workers() noexcept {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void ExecutionMode::validate() const {
  if (strategy != Strategy::Sequential && workers < 1) {
    throw ValidationError("worker count must be at least 1, got " +
                          std::to_string(workers));
  }
}

std::vector<TaskResult> collect_task_results(BoardSize n, ExecutionMode mode,
                                             const RunOptions& options) {
  mode.validate();
  if (n.value() < 1) {
    throw ValidationError("task decomposition requires n >= 1");
  }
  const ColumnTask task = make_task(options);
  const std::size_t workers =
      mode.strategy == Strategy::Sequential ? 1
                                            : static_cast<std::size_t>(mode.workers);
  TraceRecorder rec(options.trace, workers);
  switch (mode.strategy) {
    case Strategy::Sequential:
      return run_sequential(n, task, rec);
    case Strategy::Para:
      return run_para(n, mode.workers, task, rec);
    case Strategy::Pool:
      return run_pool(n, mode.workers, task, rec);
  }
  return {};
}

SolutionCount count_parallel(BoardSize n, ExecutionMode mode,
                             const RunOptions& options) {
  mode.validate();
  if (mode.strategy == Strategy::Sequential && !options.task) {
    return count_all_solutions(n, options.variant);
  }
  if (n.value() == 0) return 1;
  SolutionCount total = 0;
  for (const auto& r : collect_task_results(n, mode, options)) total += r.count;
  return total;
}

}  // namespace nqueens
