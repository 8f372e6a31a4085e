#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parking/core.hpp"
#include "parking/count.hpp"
#include "parking/search.hpp"

namespace parking {

/// A sequence a with 0 <= a_i < i (1-indexed) for every i.
class InversionSequence {
public:
  /// Throws std::invalid_argument when some entry violates 0 <= a_i < i.
  explicit InversionSequence(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator()(int i) const { return entries_[i - 1]; }
  std::span<const int> entries() const { return entries_; }

  friend bool operator==(const InversionSequence&, const InversionSequence&) = default;

private:
  std::vector<int> entries_;
};

/// A component of `underlying`: positions [start, end] hold exactly the
/// values [start, end], and no shorter prefix of that block does.
/// Two components are equal only if they share host and start.
class Component {
public:
  /// Throws std::invalid_argument unless [start, end] is a component.
  Component(Permutation underlying, int start, int end);

  /// The component of `underlying` beginning at `start`.
  static Component starting_at(Permutation underlying, int start);

  const Permutation& underlying() const { return underlying_; }
  int start() const { return start_; }
  int end() const { return end_; }
  int length() const { return end_ - start_ + 1; }

  /// Smallest value in the block; equal to start().
  int min_value() const { return start_; }
  bool contains_value(int v) const { return start_ <= v && v <= end_; }
  std::vector<int> subword() const;

  friend bool operator==(const Component& a, const Component& b) {
    return a.start_ == b.start_ && a.underlying_ == b.underlying_;
  }
  friend auto operator<=>(const Component& a, const Component& b) {
    if (auto c = a.underlying_ <=> b.underlying_; c != 0) return c;
    return a.start_ <=> b.start_;
  }

private:
  Permutation underlying_;
  int start_;
  int end_;
};

/// Greedy left-to-right split: cut after position j when max(word[1..j]) = j.
std::vector<Component> components(const Permutation& perm);

/// The component of perm containing value v.
Component component_containing(const Permutation& perm, int v);

/// Number of values smaller than i appearing after i in perm.
int inversion_number(int i, const Permutation& perm);

InversionSequence inv_seq(const Permutation& perm);

/// Inverse of inv_seq: inserts k = 1..n so that a_k letters lie to its right.
Permutation perm_from_inv_seq(const InversionSequence& a);

/// The start i when the classical outcome of p is i, i+1, ..., n, 1, ..., i-1.
std::optional<int> is_cyclic_pf(const ParkingPreference& p);

/// (n+1-i)!(i-1)!: the number of classical parking functions with outcome
/// i, i+1, ..., n, 1, ..., i-1.
Count cyclic_fibre_size(int i, int n);

/// Sum over k = 0..n-1 of k!(n-k)!.
Count cyclic_total_count(int n);

/// Brute-force count of cyclic parking functions over [n]^n.
Count count_cyclic_pf_brute(int n, const SearchOptions& opts = {});

/// Component of perm_from_inv_seq(disp(p)) containing the start of p's
/// cyclic outcome. Throws std::invalid_argument when p is not cyclic.
Component psi(const ParkingPreference& p);

/// The cyclic parking function p with psi(p) == c.
ParkingPreference psi_inverse(const Component& c);

/// Host word with slashes between components, e.g. 21/47536/(10)89 is
/// rendered "2,1/4,7,5,3,6/10,8,9" (commas only when n >= 10).
std::string format_components(const Permutation& perm);

/// As format_components with the component `marked` wrapped in brackets.
std::string format_marked_component(const Component& marked);

/// One row of the table listing every cyclic parking function of size n.
struct CyclicRow {
  Permutation outcome;
  ParkingPreference preference;
  std::vector<int> displacement;
  Permutation host;
  Component component;
};

/// Rows grouped by cyclic start 1..n, preferences lexicographic in each group.
std::vector<CyclicRow> cyclic_table(int n);

}  // namespace parking
