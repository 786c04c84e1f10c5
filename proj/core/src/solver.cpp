#include "nqueens/solver.hpp"

#include <string>

#include "nqueens/errors.hpp"

namespace nqueens {
namespace {

// Try each column of `row`; mark, recurse, unmark.
template <typename State>
SolutionCount count_rows(int n, int row, State& state) {
  if (row == n) return 1;
  SolutionCount total = 0;
  for (int j = 0; j < n; ++j) {
    if (state.is_free(row, j)) {
      state.place(row, j);
      total += count_rows(n, row + 1, state);
      state.remove(row, j);
    }
  }
  return total;
}

template <typename State>
void check_row_args(BoardSize n, int row, const State& state) {
  if (row < 0 || row > n.value()) {
    throw ValidationError("row " + std::to_string(row) +
                          " outside [0, " + std::to_string(n.value()) + "]");
  }
  if (state.size() != n.value()) {
    throw ValidationError("occupancy state sized for n = " +
                          std::to_string(state.size()) + ", expected " +
                          std::to_string(n.value()));
  }
}

template <typename State>
SolutionCount count_with_first(int n, int column) {
  State state{BoardSize(n)};
  state.place(0, column);
  return count_rows(n, 1, state);
}

void collect(int n, int row, OccupancyState& state, std::vector<int>& columns,
             std::vector<Placement>& out, std::optional<std::size_t> limit) {
  if (row == n) {
    out.push_back(Placement{columns});
    return;
  }
  for (int j = 0; j < n; ++j) {
    if (limit && out.size() >= *limit) return;
    if (state.is_free(row, j)) {
      state.place(row, j);
      columns[row] = j;
      collect(n, row + 1, state, columns, out, limit);
      state.remove(row, j);
    }
  }
}

}  // namespace

SolutionCount count_all_solutions(BoardSize n, SolverVariant variant) {
  if (variant == SolverVariant::FixedCapacity) {
    FixedOccupancy state(n);
    return count_rows(n.value(), 0, state);
  }
  OccupancyState state(n);
  return count_rows(n.value(), 0, state);
}

SolutionCount count_from_row(BoardSize n, int row, OccupancyState& state) {
  check_row_args(n, row, state);
  return count_rows(n.value(), row, state);
}

SolutionCount count_from_row(BoardSize n, int row, FixedOccupancy& state) {
  check_row_args(n, row, state);
  return count_rows(n.value(), row, state);
}

SolutionCount count_with_first_queen_at(BoardSize n, int column,
                                        SolverVariant variant) {
  if (n.value() < 1 || column < 0 || column >= n.value()) {
    throw ValidationError("first-row column " + std::to_string(column) +
                          " outside [0, " + std::to_string(n.value()) + ")");
  }
  if (variant == SolverVariant::FixedCapacity) {
    return count_with_first<FixedOccupancy>(n.value(), column);
  }
  return count_with_first<OccupancyState>(n.value(), column);
}

std::vector<Placement> enumerate_solutions(BoardSize n,
                                           std::optional<std::size_t> limit) {
  if (limit && *limit < 1) {
    throw ValidationError("enumeration limit must be at least 1");
  }
  std::vector<Placement> out;
  OccupancyState state(n);
  std::vector<int> columns(static_cast<std::size_t>(n.value()));
  collect(n.value(), 0, state, columns, out, limit);
  return out;
}

}  // namespace nqueens
