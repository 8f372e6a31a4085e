#include "parking/cyclic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "parking/classical.hpp"

namespace parking {

InversionSequence::InversionSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    if (entries_[k] < 0 || entries_[k] >= i) {
      throw std::invalid_argument("not an inversion sequence: entry " + std::to_string(i) + " is " +
                                  std::to_string(entries_[k]) + ", need 0 <= a_i < i");
    }
  }
}

Component::Component(Permutation underlying, int start, int end)
    : underlying_(std::move(underlying)), start_(start), end_(end) {
  const int n = underlying_.size();
  if (start < 1 || start > end || end > n) {
    throw std::invalid_argument("component bounds [" + std::to_string(start) + ", " +
                                std::to_string(end) + "] invalid for n = " + std::to_string(n));
  }
  // Positions 1..start-1 must hold exactly 1..start-1, positions start..end
  // exactly start..end, and no earlier cut may fall inside the block.
  int running_max = 0;
  for (int k = 1; k <= end; ++k) {
    running_max = std::max(running_max, underlying_(k));
    if (k == start - 1 && running_max != k) {
      throw std::invalid_argument("position " + std::to_string(start) + " does not begin a component of " +
                                  format_word(underlying_.word()));
    }
    if (k >= start && k < end && running_max == k) {
      throw std::invalid_argument("block [" + std::to_string(start) + ", " + std::to_string(end) +
                                  "] is not minimal in " + format_word(underlying_.word()));
    }
  }
  if (running_max != end) {
    throw std::invalid_argument("block [" + std::to_string(start) + ", " + std::to_string(end) +
                                "] does not hold the values " + std::to_string(start) + ".." +
                                std::to_string(end) + " in " + format_word(underlying_.word()));
  }
}

Component Component::starting_at(Permutation underlying, int start) {
  const int n = underlying.size();
  if (start < 1 || start > n) {
    throw std::invalid_argument("component start " + std::to_string(start) + " outside [1, " +
                                std::to_string(n) + "]");
  }
  int running_max = 0;
  for (int k = 1; k <= n; ++k) {
    running_max = std::max(running_max, underlying(k));
    if (k >= start && running_max == k) return Component(std::move(underlying), start, k);
  }
  throw std::logic_error("unreachable: running max reaches n at position n");
}

std::vector<int> Component::subword() const {
  auto w = underlying_.word();
  return {w.begin() + (start_ - 1), w.begin() + end_};
}

std::vector<Component> components(const Permutation& perm) {
  std::vector<Component> out;
  int running_max = 0;
  int start = 1;
  for (int k = 1; k <= perm.size(); ++k) {
    running_max = std::max(running_max, perm(k));
    if (running_max == k) {
      out.emplace_back(perm, start, k);
      start = k + 1;
    }
  }
  return out;
}

Component component_containing(const Permutation& perm, int v) {
  const int pos = perm.position_of(v);
  for (auto& c : components(perm)) {
    if (c.start() <= pos && pos <= c.end()) return c;
  }
  throw std::logic_error("unreachable: components cover every position");
}

int inversion_number(int i, const Permutation& perm) {
  int count = 0;
  for (int k = perm.position_of(i) + 1; k <= perm.size(); ++k) {
    if (perm(k) < i) ++count;
  }
  return count;
}

InversionSequence inv_seq(const Permutation& perm) {
  std::vector<int> a(static_cast<std::size_t>(perm.size()));
  for (int i = 1; i <= perm.size(); ++i) a[i - 1] = inversion_number(i, perm);
  return InversionSequence(std::move(a));
}

Permutation perm_from_inv_seq(const InversionSequence& a) {
  std::vector<int> word;
  word.reserve(a.size());
  for (int k = 1; k <= a.size(); ++k) {
    word.insert(word.end() - a(k), k);
  }
  return Permutation(std::move(word));
}

std::optional<int> is_cyclic_pf(const ParkingPreference& p) {
  const auto outcome = classical_park(p);
  if (!outcome.ok()) return std::nullopt;
  const auto& perm = outcome.success().outcome;
  const int n = perm.size();
  const int i = perm(1);
  for (int k = 1; k <= n; ++k) {
    if (perm(k) != (i - 1 + k - 1) % n + 1) return std::nullopt;
  }
  return i;
}

Count cyclic_fibre_size(int i, int n) {
  if (n < 1 || i < 1 || i > n) {
    throw std::invalid_argument("cyclic start " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
  }
  return checked_mul(factorial(n + 1 - i), factorial(i - 1));
}

Count cyclic_total_count(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Count total = 0;
  for (int k = 0; k < n; ++k) total = checked_add(total, checked_mul(factorial(k), factorial(n - k)));
  return total;
}

Count count_cyclic_pf_brute(int n, const SearchOptions& opts) {
  return count_preferences(n, opts, [](const ParkingPreference& p) { return is_cyclic_pf(p).has_value(); });
}

Component psi(const ParkingPreference& p) {
  const auto outcome = classical_park(p);
  if (!outcome.ok()) {
    throw std::invalid_argument(format_tuple(p.entries()) + " is not a parking function: car " +
                                std::to_string(outcome.failure().car) + " failed");
  }
  const auto& s = outcome.success();
  const auto start = is_cyclic_pf(p);
  if (!start) {
    throw std::invalid_argument("outcome " + format_word(s.outcome.word()) + " is not an increasing cycle");
  }
  const auto host = perm_from_inv_seq(InversionSequence(s.displacement));
  return component_containing(host, *start);
}

ParkingPreference psi_inverse(const Component& c) {
  const auto& host = c.underlying();
  const int n = host.size();
  const int i = c.min_value();
  const auto s = inv_seq(host);
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    // Spot of car j in i, i+1, ..., n, 1, ..., i-1.
    const int bar = j <= i - 1 ? n + j + 1 - i : j + 1 - i;
    p[j - 1] = bar - s(j);
  }
  return ParkingPreference(std::move(p));
}

namespace {

std::string join_block(std::span<const int> block, bool commas) {
  std::string out;
  for (std::size_t k = 0; k < block.size(); ++k) {
    if (commas && k > 0) out += ',';
    out += std::to_string(block[k]);
  }
  return out;
}

std::string render_components(const Permutation& perm, const Component* marked) {
  const bool commas = perm.size() > 9;
  std::string out;
  for (const auto& c : components(perm)) {
    if (!out.empty()) out += '/';
    const auto block = c.subword();
    const bool mark = marked != nullptr && c.start() == marked->start();
    if (mark) out += '[';
    out += join_block(block, commas);
    if (mark) out += ']';
  }
  return out;
}

}  // namespace

std::string format_components(const Permutation& perm) { return render_components(perm, nullptr); }

std::string format_marked_component(const Component& marked) {
  return render_components(marked.underlying(), &marked);
}

std::vector<CyclicRow> cyclic_table(int n) {
  std::vector<std::vector<CyclicRow>> groups(static_cast<std::size_t>(n));
  for_each_preference(n, [&](const ParkingPreference& p) {
    const auto start = is_cyclic_pf(p);
    if (!start) return;
    const auto outcome = classical_park(p);
    const auto& s = outcome.success();
    auto c = psi(p);
    groups[*start - 1].push_back(CyclicRow{s.outcome, p, s.displacement, c.underlying(), std::move(c)});
  });
  std::vector<CyclicRow> rows;
  for (auto& g : groups) rows.insert(rows.end(), std::make_move_iterator(g.begin()), std::make_move_iterator(g.end()));
  return rows;
}

}  // namespace parking
