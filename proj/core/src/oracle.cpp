#include "nqueens/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nqueens/errors.hpp"

namespace nqueens::oracle {
namespace {

// Rows and columns are distinct by construction; only diagonals need checking.
bool diagonals_distinct(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (a + perm[a] == b + perm[b]) return false;
      if (a - perm[a] == b - perm[b]) return false;
    }
  }
  return true;
}

}  // namespace

OracleResult brute_force_count(BoardSize n) {
  if (n.value() > kMaxBoardSize) {
    throw ResourceLimitError("oracle scans n! permutations; refusing n = " +
                             std::to_string(n.value()) + " (limit " +
                             std::to_string(kMaxBoardSize) + ")");
  }
  OracleResult result;
  result.n = n.value();
  std::vector<int> perm(static_cast<std::size_t>(n.value()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (diagonals_distinct(perm)) result.placements.push_back(Placement{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  result.count = result.placements.size();
  return result;
}

}  // namespace nqueens::oracle
