#include "count_printer.hpp"

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "parking/friendship.hpp"
#include "parking/structure.hpp"

using namespace parking;

namespace {

oracle::Word to_word(std::span<const int> s) { return {s.begin(), s.end()}; }

std::vector<oracle::Word> to_words(const std::vector<Permutation>& v) {
  std::vector<oracle::Word> out;
  for (const auto& p : v) out.push_back(to_word(p.word()));
  return out;
}

std::vector<oracle::Word> to_words(const std::vector<ParkingPreference>& v) {
  std::vector<oracle::Word> out;
  for (const auto& p : v) out.push_back(to_word(p.entries()));
  return out;
}

}  // namespace

TEST_CASE("Hamiltonian paths match exhaustive permutation search") {
  const auto c4 = graph_generator("cycle", 4);
  const auto paths = hamiltonian_paths(c4);
  CHECK(paths.size() == 8);
  CHECK(to_words(paths) == oracle::ham_paths(4, oracle::cycle_adjacency(4)));

  for (int n = 1; n <= 5; ++n) {
    CHECK(hamiltonian_paths(graph_generator("complete", n)).size() == oracle::fact(n));
  }
  for (int n = 1; n <= 5; ++n) {
    for (unsigned long long mask = 0; mask < (1ULL << (n * (n - 1) / 2)); ++mask) {
      const auto got = to_words(hamiltonian_paths(graph_from_mask(n, mask)));
      const auto want = oracle::ham_paths(n, oracle::mask_adjacency(n, mask));
      REQUIRE(got == want);
      REQUIRE(has_hamiltonian_path(graph_from_mask(n, mask)) == !want.empty());
    }
  }

  const auto fig = hamiltonian_paths(example_graph_8());
  CHECK(std::find(fig.begin(), fig.end(), parse_permutation("87152463")) != fig.end());
}

TEST_CASE("has_hamiltonian_path on small families") {
  for (int n = 3; n <= 9; ++n) CHECK(has_hamiltonian_path(graph_generator("cycle", n)));
  CHECK_FALSE(has_hamiltonian_path(graph_generator("star", 4)));
  CHECK(has_hamiltonian_path(graph_generator("empty", 1)));
  CHECK_FALSE(has_hamiltonian_path(graph_generator("empty", 2)));
}

TEST_CASE("blockers in the 8-vertex example") {
  const auto g = example_graph_8();
  const auto pi = parse_permutation("87152463");
  CHECK(is_blocker(7, 4, pi, g));
  CHECK(is_blocker(5, 4, pi, g));
  CHECK_FALSE(is_blocker(8, 4, pi, g));
  CHECK_FALSE(is_blocker(6, 4, pi, g));
  for (int i = 1; i <= 8; ++i) CHECK(is_blocker(i, i, pi, g));

  const auto b4 = blocking_sequence(4, pi, g);
  CHECK(b4.elements() == std::vector<int>{7, 1, 5, 2, 4});
  CHECK(b4.length() == 5);
  CHECK(blocking_sequence(6, pi, g).elements() == std::vector<int>{7, 1, 5, 2, 4, 6});
  CHECK(blocking_sequence(1, pi, g).elements() == std::vector<int>{1});
}

TEST_CASE("spot sets and fibre size of the 8-vertex example") {
  const auto g = example_graph_8();
  const auto pi = parse_permutation("87152463");
  const auto fc = fibre_characterisation(pi, g);
  const std::vector<SpotInterval> want{{3, 3}, {2, 5}, {8, 8}, {2, 6}, {3, 4}, {2, 7}, {2, 2}, {1, 1}};
  CHECK(fc.spot_sets == want);
  CHECK(fibre_size(pi, g) == 240);
  CHECK(enumerate_fibre(pi, g).size() == 240);
}

TEST_CASE("fibre operations reject non-Hamiltonian outcomes") {
  const auto c4 = graph_generator("cycle", 4);
  const auto bad = parse_permutation("1324");
  CHECK_THROWS_AS(fibre_characterisation(bad, c4), NotHamiltonianPath);
  CHECK_THROWS_AS(fibre_size(bad, c4), NotHamiltonianPath);
  CHECK_THROWS_AS(enumerate_fibre(bad, c4), NotHamiltonianPath);
}

TEST_CASE("complete graph with identity outcome") {
  for (int n = 1; n <= 5; ++n) {
    const auto k = graph_generator("complete", n);
    const auto id = Permutation::identity(n);
    const auto fc = fibre_characterisation(id, k);
    for (int i = 1; i <= n; ++i) CHECK(fc.spot_sets[i - 1] == SpotInterval{1, i});
    CHECK(fibre_size(id, k) == oracle::fact(n));
    CHECK(enumerate_fibre(id, k).size() == oracle::fibre(to_word(id.word()), oracle::complete_adjacency(n)).size());
  }
}

TEST_CASE("cycle fibres from enumeration") {
  const auto c4 = graph_generator("cycle", 4);
  const auto z44 = enumerate_fibre(parse_permutation("4123"), c4);
  CHECK(std::find(z44.begin(), z44.end(), make_preference({2, 3, 1, 1})) != z44.end());

  const auto pi = parse_permutation("2143");
  CHECK(to_words(enumerate_fibre(pi, c4)) == oracle::fibre(to_word(pi.word()), oracle::cycle_adjacency(4)));
  for (const auto& p : enumerate_fibre(pi, c4)) CHECK(friendship_park(p, c4).success().outcome == pi);

  CHECK(fibre_size(parse_permutation("132"), graph_generator("cycle", 3)) == 2);
}

TEST_CASE("forced preferences give a single-element fibre") {
  const auto path = graph_generator("path", 5);
  const auto id = Permutation::identity(5);
  // On a path, j > i is never a blocker for i and the run stops at i.
  const auto rev = parse_permutation("54321");
  const auto fibre = enumerate_fibre(rev, path);
  REQUIRE(fibre_size(rev, path) == 1);
  REQUIRE(fibre.size() == 1);
  for (int i = 1; i <= 5; ++i) CHECK(fibre[0](i) == rev.position_of(i));
  CHECK(fibre_size(id, path) == oracle::fact(5));
}

TEST_CASE("fibres partition the friendship pfs and match simulation (every graph, n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    for (unsigned long long mask = 0; mask < (1ULL << (n * (n - 1) / 2)); ++mask) {
      const auto g = graph_from_mask(n, mask);
      const auto adj = oracle::mask_adjacency(n, mask);
      std::vector<oracle::Word> union_of_fibres;
      for (const auto& pi : hamiltonian_paths(g)) {
        const auto fc = fibre_characterisation(pi, g);
        for (int i = 1; i <= n; ++i) {
          REQUIRE(fc.spot_sets[i - 1].hi == pi.position_of(i));
          REQUIRE(fc.spot_sets[i - 1].lo >= 1);
          REQUIRE(fc.spot_sets[i - 1].size() == blocking_sequence(i, pi, g).length());
        }
        REQUIRE(fc.spot_sets[0].size() == 1);  // car 1 is never blocked
        const auto fibre = to_words(enumerate_fibre(pi, g));
        REQUIRE(fibre == oracle::fibre(to_word(pi.word()), adj));
        REQUIRE(fibre.size() == fibre_size(pi, g));
        union_of_fibres.insert(union_of_fibres.end(), fibre.begin(), fibre.end());
      }
      std::sort(union_of_fibres.begin(), union_of_fibres.end());
      REQUIRE(std::adjacent_find(union_of_fibres.begin(), union_of_fibres.end()) == union_of_fibres.end());
      REQUIRE(union_of_fibres == to_words(enumerate_fpf(g)));
      REQUIRE(total_fpf_count(g) == union_of_fibres.size());
    }
  }
}

TEST_CASE("existence of friendship pfs follows Hamiltonicity on random graphs") {
  std::mt19937_64 rng(2024);
  for (int n : {5, 6}) {
    for (int trial = 0; trial < 12; ++trial) {
      const auto g = graph_from_mask(n, rng());
      REQUIRE(has_hamiltonian_path(g) == (count_fpf_brute(g) > 0));
      REQUIRE(has_hamiltonian_path(g) == (total_fpf_count(g) > 0));
    }
  }
}

TEST_CASE("total counts") {
  CHECK(total_fpf_count(graph_generator("star", 4)) == 0);
  CHECK(total_fpf_count(graph_generator("complete", 1)) == 1);
  for (int n = 4; n <= 7; ++n) {
    const auto g = graph_generator("cycle", n);
    CHECK(total_fpf_count(g) == count_fpf_brute(g));
  }
}
