#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nqueens/board.hpp"

namespace nqueens {

/// Availability flags for columns and both diagonal families.
///
/// A queen at (i, j) occupies column j, sum-diagonal i + j and
/// difference-diagonal i - j + n. The column array has length n and the
/// diagonal arrays length 2n; the difference index stays in [1, 2n - 1], so
/// dg2[0] is allocated but never used. Flags are stored as bytes rather than
/// packed bits.
class OccupancyState {
 public:
  /// All flags set (empty board).
  explicit OccupancyState(BoardSize n);

  /// Adopts caller-provided flag arrays. Throws ValidationError unless
  /// dg1.size() == dg2.size() == 2 * col.size().
  OccupancyState(std::vector<std::uint8_t> col, std::vector<std::uint8_t> dg1,
                 std::vector<std::uint8_t> dg2);

  int size() const noexcept { return n_; }

  bool is_free(int row, int column) const noexcept {
    return col_[column] && dg1_[row + column] && dg2_[row - column + n_];
  }
  void place(int row, int column) noexcept { set(row, column, 0); }
  void remove(int row, int column) noexcept { set(row, column, 1); }

  /// True when no queen is marked anywhere.
  bool all_free() const noexcept;

  const std::vector<std::uint8_t>& columns() const noexcept { return col_; }
  const std::vector<std::uint8_t>& sum_diagonals() const noexcept { return dg1_; }
  const std::vector<std::uint8_t>& difference_diagonals() const noexcept {
    return dg2_;
  }
  const void* storage_id() const noexcept { return col_.data(); }

  bool operator==(const OccupancyState&) const = default;

 private:
  void set(int row, int column, std::uint8_t v) noexcept {
    col_[column] = v;
    dg1_[row + column] = v;
    dg2_[row - column + n_] = v;
  }

  int n_;
  std::vector<std::uint8_t> col_;
  std::vector<std::uint8_t> dg1_;
  std::vector<std::uint8_t> dg2_;
};

/// Stack-resident variant with capacity for boards up to 32x32.
class FixedOccupancy {
 public:
  static constexpr int kCapacity = 32;

  /// Throws CapacityError when n > kCapacity.
  explicit FixedOccupancy(BoardSize n);

  int size() const noexcept { return n_; }

  bool is_free(int row, int column) const noexcept {
    return col_[column] && dg1_[row + column] && dg2_[row - column + n_];
  }
  void place(int row, int column) noexcept { set(row, column, false); }
  void remove(int row, int column) noexcept { set(row, column, true); }

  bool all_free() const noexcept;
  const void* storage_id() const noexcept { return col_.data(); }

  bool operator==(const FixedOccupancy&) const = default;

 private:
  void set(int row, int column, bool v) noexcept {
    col_[column] = v;
    dg1_[row + column] = v;
    dg2_[row - column + n_] = v;
  }

  int n_;
  std::array<bool, kCapacity> col_;
  std::array<bool, 2 * kCapacity> dg1_;
  std::array<bool, 2 * kCapacity> dg2_;
};

}  // namespace nqueens
