#include "parking/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace parking {

SearchCapExceeded::SearchCapExceeded(int n, Count space, std::uint64_t cap)
    : std::runtime_error("exhaustive search over [" + std::to_string(n) + "]^" +
                         std::to_string(n) + " needs " + to_string(space) +
                         " simulations, above the cap of " + std::to_string(cap) +
                         "; pass --force or raise PARKING_MAX_SIMULATIONS") {}

Count search_space_size(int n) {
  if (n < 1) throw std::invalid_argument("search size must be positive");
  return power(static_cast<Count>(n), n);
}

void check_search_cap(int n, const SearchOptions& opts) {
  const Count space = search_space_size(n);
  if (!opts.force && space > opts.max_simulations) throw SearchCapExceeded(n, space, opts.max_simulations);
  if (!fits_u64(space)) throw std::overflow_error("search space does not fit in 64 bits");
}

namespace {

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Sweeps lexicographic indices [begin, end) of [n]^n.
template <class Visit>
void sweep(int n, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  std::vector<int> digits(static_cast<std::size_t>(n));
  std::uint64_t rest = begin;
  for (int k = n - 1; k >= 0; --k) {
    digits[k] = static_cast<int>(rest % n) + 1;
    rest /= n;
  }
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    visit(ParkingPreference(digits));
    for (int k = n - 1; k >= 0; --k) {
      if (digits[k] < n) {
        ++digits[k];
        break;
      }
      digits[k] = 1;
    }
  }
}

template <class Shard, class Body>
std::vector<Shard> run_sharded(int n, const SearchOptions& opts, Body body) {
  check_search_cap(n, opts);
  const auto total = static_cast<std::uint64_t>(search_space_size(n));
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(opts.workers), total));
  std::vector<Shard> shards(workers);
  auto bounds = [&](unsigned w) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * w / workers);
  };
  if (workers == 1) {
    body(shards[0], 0, total);
    return shards;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] { body(shards[w], bounds(w), bounds(w + 1)); });
  }
  for (auto& t : threads) t.join();
  return shards;
}

}  // namespace

std::vector<ParkingPreference> filter_preferences(int n, const SearchOptions& opts,
                                                  const PreferencePredicate& pred) {
  using Shard = std::vector<ParkingPreference>;
  auto shards = run_sharded<Shard>(n, opts, [&](Shard& out, std::uint64_t b, std::uint64_t e) {
    sweep(n, b, e, [&](ParkingPreference p) {
      if (pred(p)) out.push_back(std::move(p));
    });
  });
  Shard merged;
  for (auto& s : shards) merged.insert(merged.end(), std::make_move_iterator(s.begin()),
                                       std::make_move_iterator(s.end()));
  return merged;
}

Count count_preferences(int n, const SearchOptions& opts, const PreferencePredicate& pred) {
  auto shards = run_sharded<std::uint64_t>(n, opts, [&](std::uint64_t& out, std::uint64_t b,
                                                        std::uint64_t e) {
    out = 0;
    sweep(n, b, e, [&](const ParkingPreference& p) {
      if (pred(p)) ++out;
    });
  });
  Count total = 0;
  for (auto c : shards) total = checked_add(total, c);
  return total;
}

void for_each_preference(int n, const std::function<void(const ParkingPreference&)>& visit) {
  const auto total = static_cast<std::uint64_t>(search_space_size(n));
  sweep(n, 0, total, visit);
}

std::uint64_t max_simulations_from_env() {
  const char* raw = std::getenv("PARKING_MAX_SIMULATIONS");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxSimulations;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("PARKING_MAX_SIMULATIONS is not a count: ") + raw);
  }
}

}  // namespace parking
