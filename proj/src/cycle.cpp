#include "parking/cycle.hpp"

#include <stdexcept>
#include <string>

namespace parking {

namespace {

void check_outcome(const CyclicOutcome& c) {
  if (c.n < 3) throw std::invalid_argument("cycle graph needs n >= 3, got " + std::to_string(c.n));
  if (c.start < 1 || c.start > c.n) {
    throw std::invalid_argument("cyclic start " + std::to_string(c.start) + " outside [1, " +
                                std::to_string(c.n) + "]");
  }
}

}  // namespace

Permutation expand_cyclic(const CyclicOutcome& c) {
  check_outcome(c);
  std::vector<int> word;
  word.reserve(c.n);
  int v = c.start;
  for (int k = 0; k < c.n; ++k) {
    word.push_back(v);
    if (c.direction == Direction::Increasing) {
      v = v == c.n ? 1 : v + 1;
    } else {
      v = v == 1 ? c.n : v - 1;
    }
  }
  return Permutation(std::move(word));
}

std::vector<CyclicOutcome> cyclic_outcomes(int n) {
  std::vector<CyclicOutcome> out;
  for (auto dir : {Direction::Increasing, Direction::Decreasing}) {
    for (int i = 1; i <= n; ++i) out.push_back({dir, i, n});
  }
  return out;
}

Count cycle_fibre_size(const CyclicOutcome& c) {
  check_outcome(c);
  const int n = c.n;
  const int i = c.start;
  if (c.direction == Direction::Decreasing) {
    if (i == n) return 1;
    if (i == n - 1) return static_cast<Count>(n);
    if (n == 3) return static_cast<Count>(i + 1);
    return checked_mul(i + 1, i + 2);
  }
  if (i <= 3) return checked_mul(factorial(n + 1 - i), factorial(i - 1));
  // 3 divides i! for i >= 3.
  return exact_div(checked_mul(factorial(n - i + 1), factorial(i)), 3);
}

Count cycle_total_count(int n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3, got " + std::to_string(n));
  Count total = static_cast<Count>(n + 1);
  for (int i = 1; i <= n - 2; ++i) {
    total = checked_add(total, n == 3 ? static_cast<Count>(i + 1) : checked_mul(i + 1, i + 2));
  }
  for (int i = 1; i <= 3; ++i) {
    total = checked_add(total, checked_mul(factorial(n + 1 - i), factorial(i - 1)));
  }
  for (int i = 4; i <= n; ++i) {
    total = checked_add(total, exact_div(checked_mul(factorial(n - i + 1), factorial(i)), 3));
  }
  return total;
}

}  // namespace parking
