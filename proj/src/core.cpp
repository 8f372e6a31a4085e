#include "parking/core.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace parking {

ParkingPreference::ParkingPreference(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("parking preference must be non-empty");
  const int n = size();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1 || entries_[i] > n) {
      throw std::invalid_argument("preference of car " + std::to_string(i + 1) + " is " +
                                  std::to_string(entries_[i]) + ", outside [1, " +
                                  std::to_string(n) + "]");
    }
  }
}

ParkingPreference make_preference(std::vector<int> entries) {
  return ParkingPreference(std::move(entries));
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("permutation must be non-empty");
  const int n = size();
  inverse_.assign(word_.size(), 0);
  for (int k = 1; k <= n; ++k) {
    const int v = word_[k - 1];
    if (v < 1 || v > n) {
      throw std::invalid_argument("permutation entry " + std::to_string(v) + " outside [1, " +
                                  std::to_string(n) + "]");
    }
    if (inverse_[v - 1] != 0) {
      throw std::invalid_argument("permutation repeats the value " + std::to_string(v));
    }
    inverse_[v - 1] = k;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[k] = k + 1;
  return Permutation(std::move(w));
}

int Permutation::position_of(int value) const {
  if (value < 1 || value > size()) {
    throw std::out_of_range("value " + std::to_string(value) + " outside [1, " +
                            std::to_string(size()) + "]");
  }
  return inverse_[value - 1];
}

int inverse_position(const Permutation& perm, int value) { return perm.position_of(value); }

FriendshipGraph::FriendshipGraph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
  adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
  neighbours_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} has an endpoint outside [1, " + std::to_string(n) + "]");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto& cell = adjacency_[static_cast<std::size_t>(u - 1) * n + (v - 1)];
    if (cell) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
    }
    cell = 1;
    adjacency_[static_cast<std::size_t>(v - 1) * n + (u - 1)] = 1;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    neighbours_[u - 1].push_back(v);
    neighbours_[v - 1].push_back(u);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& nb : neighbours_) std::sort(nb.begin(), nb.end());
}

bool FriendshipGraph::adjacent(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  return adjacency_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)] != 0;
}

FriendshipGraph graph_generator(std::string_view family, int n) {
  std::vector<FriendshipGraph::Edge> edges;
  if (family == "cycle") {
    if (n < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);
  } else if (family == "complete") {
    if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  } else if (family == "path") {
    if (n < 1) throw std::invalid_argument("path graph needs at least 1 vertex");
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  } else if (family == "star") {
    if (n < 1) throw std::invalid_argument("star graph needs at least 1 vertex");
    for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
  } else if (family == "empty") {
    if (n < 1) throw std::invalid_argument("empty graph needs at least 1 vertex");
  } else {
    throw std::invalid_argument("unknown graph family '" + std::string(family) + "'");
  }
  return FriendshipGraph(n, edges);
}

FriendshipGraph example_graph_8() {
  // Red path 8-7-1-5-2-4-6-3, plus the black edges 8-4, 4-3, 3-2, 2-8.
  static constexpr FriendshipGraph::Edge edges[] = {
      {8, 7}, {7, 1}, {1, 5}, {5, 2}, {2, 4}, {4, 6}, {6, 3},
      {8, 4}, {4, 3}, {3, 2}, {2, 8},
  };
  return FriendshipGraph(8, edges);
}

FriendshipGraph graph_from_mask(int n, unsigned long long mask) {
  std::vector<FriendshipGraph::Edge> edges;
  int bit = 0;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v, ++bit) {
      if (mask >> bit & 1ULL) edges.emplace_back(u, v);
    }
  }
  return FriendshipGraph(n, edges);
}

const ParkSuccess& ParkOutcome::success() const {
  if (const auto* s = std::get_if<ParkSuccess>(&value_)) return *s;
  throw std::logic_error("parking failed: no outcome permutation");
}

const ParkFailure& ParkOutcome::failure() const {
  if (const auto* f = std::get_if<ParkFailure>(&value_)) return *f;
  throw std::logic_error("parking succeeded: no failing car");
}

std::string format_word(std::span<const int> values) {
  const bool compact = std::all_of(values.begin(), values.end(), [](int v) { return v >= 0 && v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_tuple(std::span<const int> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  out += ')';
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty()) throw std::invalid_argument("empty integer list");
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("malformed integer '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  if (text.find(',') != std::string_view::npos) return Permutation(parse_int_list(text));
  if (text.empty()) throw std::invalid_argument("empty permutation");
  std::vector<int> word;
  for (char c : text) {
    if (c < '1' || c > '9') {
      throw std::invalid_argument("compact permutation '" + std::string(text) +
                                  "' may only contain digits 1-9; use commas for n >= 10");
    }
    word.push_back(c - '0');
  }
  return Permutation(std::move(word));
}

std::ostream& operator<<(std::ostream& os, const ParkingPreference& p) {
  return os << format_tuple(p.entries());
}

std::ostream& operator<<(std::ostream& os, const Permutation& perm) {
  return os << format_word(perm.word());
}

}  // namespace parking
