#pragma once

#include <stdexcept>
#include <vector>

#include "parking/core.hpp"
#include "parking/count.hpp"

namespace parking {

class NotHamiltonianPath : public std::invalid_argument {
public:
  explicit NotHamiltonianPath(const Permutation& perm);
};

/// True when consecutive entries of `perm` are adjacent in g.
bool is_hamiltonian_path(const Permutation& perm, const FriendshipGraph& g);

/// Every Hamiltonian path of g, in lexicographic order of the word.
/// Depth-first backtracking, extending with neighbours in ascending order.
std::vector<Permutation> hamiltonian_paths(const FriendshipGraph& g);

/// Stops at the first path found.
bool has_hamiltonian_path(const FriendshipGraph& g);

/// j blocks i in perm when j <= i, or when j > i and a neighbour l of j in
/// the word satisfies l < i and l is not adjacent to i in g.
bool is_blocker(int j, int i, const Permutation& perm, const FriendshipGraph& g);

/// Maximal contiguous run of blockers for `target` ending at target's
/// position in `host`. Positions are 1-indexed and inclusive.
struct BlockingSequence {
  Permutation host;
  int target;
  int first_position;
  int last_position;  // host.position_of(target)

  int length() const { return last_position - first_position + 1; }
  std::vector<int> elements() const;
};

BlockingSequence blocking_sequence(int i, const Permutation& perm, const FriendshipGraph& g);

/// Inclusive interval of spots [lo, hi].
struct SpotInterval {
  int lo;
  int hi;

  int size() const { return hi - lo + 1; }
  bool contains(int spot) const { return lo <= spot && spot <= hi; }
  friend bool operator==(const SpotInterval&, const SpotInterval&) = default;
};

/// The fibre of a Hamiltonian path `outcome`: p has friendship outcome
/// `outcome` iff p(i) lies in spot_sets[i-1] for every car i.
struct FibreCharacterisation {
  Permutation outcome;
  std::vector<SpotInterval> spot_sets;
};

/// Throws NotHamiltonianPath when perm is not a Hamiltonian path of g.
FibreCharacterisation fibre_characterisation(const Permutation& perm, const FriendshipGraph& g);

/// Product of the blocking-sequence lengths.
Count fibre_size(const Permutation& perm, const FriendshipGraph& g);

/// The Cartesian product of the spot sets, lexicographically.
std::vector<ParkingPreference> enumerate_fibre(const Permutation& perm, const FriendshipGraph& g);

/// Sum of fibre_size over all Hamiltonian paths; 0 when there are none.
Count total_fpf_count(const FriendshipGraph& g);

}  // namespace parking
