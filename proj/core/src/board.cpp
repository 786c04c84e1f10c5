#include "nqueens/board.hpp"

#include <string>
#include <vector>

#include "nqueens/errors.hpp"

namespace nqueens {

BoardSize::BoardSize(int n) : n_(n) {
  if (n < 0) {
    throw ValidationError("board size must be nonnegative, got " +
                          std::to_string(n));
  }
}

bool is_valid_placement(std::span<const int> columns) {
  const int n = static_cast<int>(columns.size());
  std::vector<bool> col(n, false), sum(2 * n, false), diff(2 * n, false);
  for (int i = 0; i < n; ++i) {
    const int j = columns[i];
    if (j < 0 || j >= n) return false;
    if (col[j] || sum[i + j] || diff[i - j + n]) return false;
    col[j] = sum[i + j] = diff[i - j + n] = true;
  }
  return true;
}

}  // namespace nqueens
