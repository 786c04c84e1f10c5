#pragma once

#include <vector>

#include "nqueens/board.hpp"

namespace nqueens::oracle {

inline constexpr int kMaxBoardSize = 11;

struct OracleResult {
  int n = 0;
  SolutionCount count = 0;
  std::vector<Placement> placements;  // lexicographic
};

/// Exhaustive reference: scans all n! column permutations and keeps those
/// whose sum and difference diagonals are pairwise distinct. Shares no
/// search code with the backtracking solver.
/// Throws ResourceLimitError when n > kMaxBoardSize.
OracleResult brute_force_count(BoardSize n);

}  // namespace nqueens::oracle
