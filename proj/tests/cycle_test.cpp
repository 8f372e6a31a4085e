#include "count_printer.hpp"

#include <algorithm>

#include "oracle.hpp"
#include "parking/cycle.hpp"
#include "parking/friendship.hpp"
#include "parking/structure.hpp"

using namespace parking;

TEST_CASE("expand_cyclic") {
  CHECK(expand_cyclic({Direction::Increasing, 8, 10}) == parse_permutation("8,9,10,1,2,3,4,5,6,7"));
  CHECK(expand_cyclic({Direction::Increasing, 1, 5}) == Permutation::identity(5));
  CHECK(expand_cyclic({Direction::Decreasing, 5, 5}) == parse_permutation("54321"));
  CHECK(expand_cyclic({Direction::Decreasing, 2, 5}) == parse_permutation("21543"));
  for (int n = 3; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) {
      const auto inc = expand_cyclic({Direction::Increasing, i, n});
      const auto dec = expand_cyclic({Direction::Decreasing, i, n});
      CHECK(inc == Permutation(oracle::increasing_cycle(i, n)));
      CHECK(dec == Permutation(oracle::decreasing_cycle(i, n)));
    }
  }
  CHECK_THROWS_AS(expand_cyclic({Direction::Increasing, 0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(expand_cyclic({Direction::Increasing, 6, 5}), std::invalid_argument);
  CHECK_THROWS_AS(expand_cyclic({Direction::Decreasing, 1, 2}), std::invalid_argument);
}

TEST_CASE("cyclic outcomes are exactly the Hamiltonian paths of C_n") {
  for (int n = 3; n <= 8; ++n) {
    const auto outs = cyclic_outcomes(n);
    REQUIRE(outs.size() == static_cast<std::size_t>(2 * n));
    CHECK(outs.front() == CyclicOutcome{Direction::Increasing, 1, n});
    CHECK(outs.back() == CyclicOutcome{Direction::Decreasing, n, n});
    std::vector<Permutation> expanded;
    for (const auto& c : outs) expanded.push_back(expand_cyclic(c));
    std::sort(expanded.begin(), expanded.end());
    CHECK(expanded == hamiltonian_paths(graph_generator("cycle", n)));
  }
}

TEST_CASE("closed-form fibre sizes: worked values") {
  CHECK(cycle_fibre_size({Direction::Decreasing, 2, 5}) == 12);
  CHECK(cycle_fibre_size({Direction::Decreasing, 1, 3}) == 2);
  CHECK(cycle_fibre_size({Direction::Increasing, 4, 4}) == 8);
  CHECK(cycle_fibre_size({Direction::Decreasing, 4, 5}) == 5);
  CHECK(cycle_fibre_size({Direction::Decreasing, 5, 5}) == 1);
  CHECK(cycle_fibre_size({Direction::Increasing, 1, 5}) == 120);
}

TEST_CASE("closed-form fibre sizes agree with blocking products and exhaustion") {
  for (int n = 3; n <= 7; ++n) {
    const auto g = graph_generator("cycle", n);
    const auto adj = oracle::cycle_adjacency(n);
    for (const auto& c : cyclic_outcomes(n)) {
      const auto pi = expand_cyclic(c);
      const auto w = pi.word();
      CAPTURE(n);
      CAPTURE(c.start);
      const Count closed = cycle_fibre_size(c);
      CHECK(closed == fibre_size(pi, g));
      if (n <= 6) CHECK(closed == static_cast<Count>(oracle::fibre({w.begin(), w.end()}, adj).size()));
    }
  }
}

TEST_CASE("cycle totals") {
  // Frozen from exhaustive simulation with the test oracle.
  const std::vector<std::pair<int, Count>> frozen{{3, 16}, {4, 65}, {5, 256}, {6, 1331}, {7, 8710}};
  for (auto [n, want] : frozen) {
    CHECK(cycle_total_count(n) == want);
    Count sum = 0;
    for (const auto& c : cyclic_outcomes(n)) sum += cycle_fibre_size(c);
    CHECK(sum == want);
    CHECK(total_fpf_count(graph_generator("cycle", n)) == want);
  }
  for (int n = 3; n <= 5; ++n) {
    CHECK(cycle_total_count(n) == static_cast<Count>(oracle::count_fpf(n, oracle::cycle_adjacency(n))));
  }
  for (int n = 8; n <= 14; ++n) CHECK(cycle_total_count(n) == total_fpf_count(graph_generator("cycle", n)));
  CHECK_THROWS_AS(cycle_total_count(2), std::invalid_argument);
  CHECK_THROWS_AS(cycle_fibre_size({Direction::Increasing, 1, 2}), std::invalid_argument);
}

TEST_CASE("blocking sequences on the increasing cycle starting at 4") {
  const int n = 7;
  const auto g = graph_generator("cycle", n);
  const auto pi = expand_cyclic({Direction::Increasing, 4, n});  // 4567123
  // 4 is blocked only by itself; 5, 6, 7 by everything before them; 1 by
  // itself; 2 by 1 and 2; 3 is blocked by 1, 2, 3 and also by 7 (a neighbour
  // of 1 in the word).
  std::vector<int> lengths;
  for (int i = 1; i <= n; ++i) lengths.push_back(blocking_sequence(i, pi, g).length());
  CHECK(lengths == std::vector<int>{1, 2, 4, 1, 2, 3, 4});
}
