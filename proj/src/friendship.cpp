#include "parking/friendship.hpp"

#include <stdexcept>
#include <string>

namespace parking {

LotState LotState::with_cars(int n, std::span<const std::pair<int, int>> car_at_spot) {
  LotState state(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (auto [car, spot] : car_at_spot) {
    if (car < 1 || car > n || spot < 1 || spot > n) throw std::invalid_argument("car or spot out of range");
    if (seen[car]) throw std::invalid_argument("car " + std::to_string(car) + " placed twice");
    if (state.occupied(spot)) throw std::invalid_argument("spot " + std::to_string(spot) + " filled twice");
    seen[car] = true;
    state.park(car, spot);
  }
  return state;
}

std::optional<int> LotState::occupant(int spot) const {
  if (spot < 1 || spot > size() || cells_[spot - 1] == 0) return std::nullopt;
  return cells_[spot - 1];
}

void LotState::park(int car, int spot) { cells_[spot - 1] = car; }

bool is_available(const LotState& state, const FriendshipGraph& g, int car, int spot) {
  if (state.occupied(spot)) return false;
  for (int side : {spot - 1, spot + 1}) {
    const auto other = state.occupant(side);
    if (other && !g.adjacent(*other, car)) return false;
  }
  return true;
}

ParkOutcome friendship_park(const ParkingPreference& p, const FriendshipGraph& g) {
  const int n = p.size();
  if (g.size() != n) {
    throw std::invalid_argument("preference has " + std::to_string(n) + " cars but the graph has " +
                                std::to_string(g.size()) + " vertices");
  }
  LotState lot(n);
  std::vector<int> displacement(n, 0);
  for (int car = 1; car <= n; ++car) {
    int spot = p(car);
    while (spot <= n && !is_available(lot, g, car, spot)) ++spot;
    if (spot > n) return ParkFailure{car};
    lot.park(car, spot);
    displacement[car - 1] = spot - p(car);
  }
  return ParkSuccess{Permutation(std::move(lot).release()), std::move(displacement)};
}

bool is_friendship_pf(const ParkingPreference& p, const FriendshipGraph& g) {
  return friendship_park(p, g).ok();
}

std::vector<ParkingPreference> enumerate_fpf(const FriendshipGraph& g, const SearchOptions& opts) {
  return filter_preferences(g.size(), opts, [&](const ParkingPreference& p) { return is_friendship_pf(p, g); });
}

Count count_fpf_brute(const FriendshipGraph& g, const SearchOptions& opts) {
  return count_preferences(g.size(), opts, [&](const ParkingPreference& p) { return is_friendship_pf(p, g); });
}

}  // namespace parking
