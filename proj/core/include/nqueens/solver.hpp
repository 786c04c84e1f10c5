#pragma once

#include <optional>
#include <vector>

#include "nqueens/board.hpp"
#include "nqueens/occupancy.hpp"

namespace nqueens {

/// Storage used for the occupancy flags during search.
enum class SolverVariant {
  Dynamic,        // heap-allocated, any n
  FixedCapacity,  // stack arrays, n <= 32
};

/// Counts every valid placement on an n x n board. n = 0 yields 1 (the
/// empty board is trivially solved). Throws CapacityError for the fixed
/// variant when n > 32.
SolutionCount count_all_solutions(BoardSize n,
                                  SolverVariant variant = SolverVariant::Dynamic);

/// Counts completions of rows [row, n) given the queens already marked in
/// `state`. The state is restored exactly before returning.
/// Throws ValidationError if row is outside [0, n] or state.size() != n.
SolutionCount count_from_row(BoardSize n, int row, OccupancyState& state);
SolutionCount count_from_row(BoardSize n, int row, FixedOccupancy& state);

/// Counts the solutions whose row-0 queen is in `column`. Summing over all
/// columns gives count_all_solutions(n).
/// Throws ValidationError unless n >= 1 and 0 <= column < n.
SolutionCount count_with_first_queen_at(
    BoardSize n, int column, SolverVariant variant = SolverVariant::Dynamic);

/// Lists solutions in lexicographic order of their column sequences,
/// stopping after `limit` entries when given. Throws ValidationError if
/// limit is present and < 1.
std::vector<Placement> enumerate_solutions(BoardSize n,
                                           std::optional<std::size_t> limit = {});

}  // namespace nqueens
