#pragma once

#include <optional>
#include <vector>

#include "parking/core.hpp"
#include "parking/count.hpp"
#include "parking/search.hpp"

namespace parking {

/// Occupancy of the lot while cars arrive; cell k holds the car in spot k.
class LotState {
public:
  explicit LotState(int n) : cells_(static_cast<std::size_t>(n), 0) {}

  /// Builds a partial lot from (car, spot) placements. Throws
  /// std::invalid_argument on a repeated car or spot.
  static LotState with_cars(int n, std::span<const std::pair<int, int>> car_at_spot);

  int size() const { return static_cast<int>(cells_.size()); }
  std::optional<int> occupant(int spot) const;
  bool occupied(int spot) const { return cells_[spot - 1] != 0; }

  /// Precondition: spot is empty and car is not yet parked.
  void park(int car, int spot);

  std::vector<int> release() && { return std::move(cells_); }

private:
  std::vector<int> cells_;
};

/// Spot is available for `car` when it is empty and each existing neighbour
/// spot is empty or holds a friend of `car`. Spots 0 and n+1 count as empty.
bool is_available(const LotState& state, const FriendshipGraph& g, int car, int spot);

/// Friendship process: car i takes the first available spot at or after
/// p(i). Throws std::invalid_argument if g and p differ in size.
ParkOutcome friendship_park(const ParkingPreference& p, const FriendshipGraph& g);

bool is_friendship_pf(const ParkingPreference& p, const FriendshipGraph& g);

/// All g-friendship parking functions by exhaustive search, lexicographic.
/// Throws SearchCapExceeded above the budget unless opts.force is set.
std::vector<ParkingPreference> enumerate_fpf(const FriendshipGraph& g, const SearchOptions& opts = {});

/// Brute-force count matching enumerate_fpf(g).size().
Count count_fpf_brute(const FriendshipGraph& g, const SearchOptions& opts = {});

}  // namespace parking
