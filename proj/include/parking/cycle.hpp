#pragma once

#include <vector>

#include "parking/core.hpp"
#include "parking/count.hpp"

namespace parking {

enum class Direction { Increasing, Decreasing };

/// A Hamiltonian path of the cycle graph C_n, starting at `start`.
///   Increasing: start, start+1, ..., n, 1, ..., start-1
///   Decreasing: start, start-1, ..., 1, n, n-1, ..., start+1
struct CyclicOutcome {
  Direction direction;
  int start;
  int n;

  friend bool operator==(const CyclicOutcome&, const CyclicOutcome&) = default;
};

/// Throws std::invalid_argument unless n >= 3 and 1 <= start <= n.
Permutation expand_cyclic(const CyclicOutcome& c);

/// All 2n cyclic outcomes on n: increasing starts 1..n, then decreasing.
std::vector<CyclicOutcome> cyclic_outcomes(int n);

/// Closed-form size of the C_n-friendship fibre of expand_cyclic(c).
///
/// Decreasing: (start+1)(start+2) for start <= n-2, n for start = n-1 and 1
/// for start = n. On C_3 the first case is start+1 instead, since vertices
/// 1 and 2 are then adjacent and n stops being a blocker for n-1.
/// Increasing: (n+1-start)!(start-1)! for start <= 3, and
/// (n-start+1)! start!/3 for start >= 4.
Count cycle_fibre_size(const CyclicOutcome& c);

/// |FPF(C_n)| by the closed form, with the same n = 3 adjustment.
/// Throws std::invalid_argument for n < 3.
Count cycle_total_count(int n);

}  // namespace parking
