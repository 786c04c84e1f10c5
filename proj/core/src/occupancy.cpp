#include "nqueens/occupancy.hpp"

#include <algorithm>
#include <string>

#include "nqueens/errors.hpp"

namespace nqueens {

OccupancyState::OccupancyState(BoardSize n)
    : n_(n.value()),
      col_(static_cast<std::size_t>(n_), 1),
      dg1_(2 * static_cast<std::size_t>(n_), 1),
      dg2_(2 * static_cast<std::size_t>(n_), 1) {}

OccupancyState::OccupancyState(std::vector<std::uint8_t> col,
                               std::vector<std::uint8_t> dg1,
                               std::vector<std::uint8_t> dg2)
    : n_(static_cast<int>(col.size())),
      col_(std::move(col)),
      dg1_(std::move(dg1)),
      dg2_(std::move(dg2)) {
  const auto expected = 2 * col_.size();
  if (dg1_.size() != expected || dg2_.size() != expected) {
    throw ValidationError(
        "diagonal flag arrays must have length 2n = " +
        std::to_string(expected) + " for n = " + std::to_string(n_) +
        " (got " + std::to_string(dg1_.size()) + " and " +
        std::to_string(dg2_.size()) + ")");
  }
}

bool OccupancyState::all_free() const noexcept {
  auto set = [](std::uint8_t v) { return v != 0; };
  // dg2[0] is outside the reachable window and is ignored.
  return std::all_of(col_.begin(), col_.end(), set) &&
         std::all_of(dg1_.begin(), dg1_.end(), set) &&
         (dg2_.empty() || std::all_of(dg2_.begin() + 1, dg2_.end(), set));
}

FixedOccupancy::FixedOccupancy(BoardSize n) : n_(n.value()) {
  if (n_ > kCapacity) {
    throw CapacityError("fixed-capacity solver supports n <= " +
                        std::to_string(kCapacity) + ", got " +
                        std::to_string(n_));
  }
  col_.fill(true);
  dg1_.fill(true);
  dg2_.fill(true);
}

bool FixedOccupancy::all_free() const noexcept {
  return std::all_of(col_.begin(), col_.end(), [](bool v) { return v; }) &&
         std::all_of(dg1_.begin(), dg1_.end(), [](bool v) { return v; }) &&
         std::all_of(dg2_.begin(), dg2_.end(), [](bool v) { return v; });
}

}  // namespace nqueens
