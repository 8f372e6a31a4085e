#include "parking/classical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace parking {

ParkOutcome classical_park(const ParkingPreference& p) {
  const int n = p.size();
  std::vector<int> spot_to_car(n, 0);
  std::vector<int> displacement(n, 0);
  for (int car = 1; car <= n; ++car) {
    int spot = p(car);
    while (spot <= n && spot_to_car[spot - 1] != 0) ++spot;
    if (spot > n) return ParkFailure{car};
    spot_to_car[spot - 1] = car;
    displacement[car - 1] = spot - p(car);
  }
  return ParkSuccess{Permutation(std::move(spot_to_car)), std::move(displacement)};
}

bool is_parking_function(const ParkingPreference& p) {
  std::vector<int> sorted(p.entries().begin(), p.entries().end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] > static_cast<int>(i) + 1) return false;
  }
  return true;
}

long long total_displacement(const ParkOutcome& outcome) {
  if (!outcome.ok()) throw std::logic_error("total displacement is undefined for a failed process");
  const auto& d = outcome.success().displacement;
  return std::accumulate(d.begin(), d.end(), 0LL);
}

}  // namespace parking
