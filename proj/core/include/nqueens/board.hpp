#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace nqueens {

/// Number of solutions. Counts for every tractable board fit easily in 64 bits.
using SolutionCount = std::uint64_t;

/// Validated board dimension (rows = columns = n). Construction rejects n < 0.
class BoardSize {
 public:
  explicit BoardSize(int n);

  int value() const noexcept { return n_; }
  operator int() const noexcept { return n_; }  // NOLINT: used as an index bound

  auto operator<=>(const BoardSize&) const = default;

 private:
  int n_;
};

/// One queen per row: columns[i] is the column of the queen in row i.
struct Placement {
  std::vector<int> columns;

  int size() const noexcept { return static_cast<int>(columns.size()); }
  auto operator<=>(const Placement&) const = default;
};

/// True when no two queens share a column or a diagonal and every column
/// index lies in [0, n).
bool is_valid_placement(std::span<const int> columns);
inline bool is_valid_placement(const Placement& p) {
  return is_valid_placement(p.columns);
}

}  // namespace nqueens
