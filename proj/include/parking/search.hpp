#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "parking/core.hpp"
#include "parking/count.hpp"

namespace parking {

/// 8^8: the default budget for brute-force sweeps of [n]^n.
inline constexpr std::uint64_t kDefaultMaxSimulations = 16'777'216;

struct SearchOptions {
  std::uint64_t max_simulations = kDefaultMaxSimulations;
  bool force = false;    // ignore max_simulations
  unsigned workers = 1;  // 0 means std::thread::hardware_concurrency()
};

class SearchCapExceeded : public std::runtime_error {
public:
  SearchCapExceeded(int n, Count space, std::uint64_t cap);
};

/// |[n]^n|.
Count search_space_size(int n);

/// Throws SearchCapExceeded when n^n exceeds the budget and force is unset.
void check_search_cap(int n, const SearchOptions& opts);

using PreferencePredicate = std::function<bool(const ParkingPreference&)>;

/// Every p in [n]^n with pred(p), in lexicographic order. The space is split
/// into contiguous lexicographic shards, one per worker; the merged output is
/// identical for any worker count. `pred` must be safe to call concurrently.
std::vector<ParkingPreference> filter_preferences(int n, const SearchOptions& opts,
                                                  const PreferencePredicate& pred);

/// |{p in [n]^n : pred(p)}|, sharded the same way.
Count count_preferences(int n, const SearchOptions& opts, const PreferencePredicate& pred);

/// Sequential lexicographic sweep with no cap check; for small test sweeps.
void for_each_preference(int n, const std::function<void(const ParkingPreference&)>& visit);

/// Reads the budget override from the environment variable
/// PARKING_MAX_SIMULATIONS (a count of simulations, not n).
std::uint64_t max_simulations_from_env();

}  // namespace parking
