#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace parking {

// Cars, spots and graph vertices are all 1-indexed at the API boundary.
// Storage is 0-indexed; every accessor taking an index below is 1-indexed.

/// A vector p in [n]^n: car i prefers spot p(i). Being a parking function is
/// a property checked elsewhere, not an invariant of this type.
class ParkingPreference {
public:
  /// Throws std::invalid_argument on empty input or an entry outside [1, n].
  explicit ParkingPreference(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator()(int car) const { return entries_[car - 1]; }
  std::span<const int> entries() const { return entries_; }

  friend bool operator==(const ParkingPreference&, const ParkingPreference&) = default;
  friend auto operator<=>(const ParkingPreference&, const ParkingPreference&) = default;

private:
  std::vector<int> entries_;
};

ParkingPreference make_preference(std::vector<int> entries);

/// A permutation of [n] in one-line notation. The inverse is cached so that
/// position_of is O(1).
class Permutation {
public:
  /// Throws std::invalid_argument unless `word` is a bijection on [1, n].
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }

  /// Value at 1-indexed position k.
  int operator()(int k) const { return word_[k - 1]; }

  /// Position j with (*this)(j) == value. Throws std::out_of_range.
  int position_of(int value) const;

  std::span<const int> word() const { return word_; }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.word_ == b.word_; }
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.word_ <=> b.word_; }

private:
  std::vector<int> word_;
  std::vector<int> inverse_;
};

int inverse_position(const Permutation& perm, int value);

/// Simple undirected graph on [1, n] with an O(1) adjacency query.
class FriendshipGraph {
public:
  using Edge = std::pair<int, int>;

  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// endpoints outside [1, n].
  FriendshipGraph(int n, std::span<const Edge> edges);

  int size() const { return n_; }
  bool adjacent(int u, int v) const;

  /// Sorted neighbour list of v.
  std::span<const int> neighbours(int v) const { return neighbours_[v - 1]; }
  int degree(int v) const { return static_cast<int>(neighbours_[v - 1].size()); }

  /// Edges normalised as (min, max), sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const FriendshipGraph& a, const FriendshipGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<unsigned char> adjacency_;
  std::vector<std::vector<int>> neighbours_;
};

/// Named families: "cycle" (n >= 3), "complete", "path", "star" (centre 1),
/// "empty". Throws std::invalid_argument on unknown names or bad sizes.
FriendshipGraph graph_generator(std::string_view family, int n);

/// The 8-vertex graph with Hamiltonian path 87152463 used as the worked
/// blocking-sequence example.
FriendshipGraph example_graph_8();

/// The graph on [n] whose edges are the set bits of `mask` over the pairs
/// (1,2), (1,3), ..., (n-1,n) in lexicographic order.
FriendshipGraph graph_from_mask(int n, unsigned long long mask);

struct ParkSuccess {
  Permutation outcome;            // outcome(k) = car parked in spot k
  std::vector<int> displacement;  // displacement[i-1] for car i

  friend bool operator==(const ParkSuccess&, const ParkSuccess&) = default;
};

struct ParkFailure {
  int car;  // first car that found no spot

  friend bool operator==(const ParkFailure&, const ParkFailure&) = default;
};

class ParkOutcome {
public:
  ParkOutcome(ParkSuccess s) : value_(std::move(s)) {}
  ParkOutcome(ParkFailure f) : value_(f) {}

  bool ok() const { return std::holds_alternative<ParkSuccess>(value_); }
  explicit operator bool() const { return ok(); }

  /// Throw std::logic_error when called on the wrong alternative.
  const ParkSuccess& success() const;
  const ParkFailure& failure() const;

  friend bool operator==(const ParkOutcome&, const ParkOutcome&) = default;

private:
  std::variant<ParkSuccess, ParkFailure> value_;
};

// Text helpers shared by the CLI and the reports.

/// Compact digits when every value is at most 9, comma-separated otherwise.
std::string format_word(std::span<const int> values);

/// "(3,1,1,2)"
std::string format_tuple(std::span<const int> values);

/// Comma-separated integers; whitespace around items is ignored.
/// Throws std::invalid_argument on malformed input.
std::vector<int> parse_int_list(std::string_view text);

/// Comma-separated integers, or a compact digit string for n <= 9.
Permutation parse_permutation(std::string_view text);

std::ostream& operator<<(std::ostream& os, const ParkingPreference& p);
std::ostream& operator<<(std::ostream& os, const Permutation& perm);

}  // namespace parking
