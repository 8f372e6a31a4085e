#include "count_printer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "oracle.hpp"
#include "parking/classical.hpp"
#include "parking/cyclic.hpp"

using namespace parking;

namespace {

std::vector<std::pair<int, int>> bounds(const std::vector<Component>& cs) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : cs) out.emplace_back(c.start(), c.end());
  return out;
}

}  // namespace

TEST_CASE("components of worked permutations") {
  CHECK(format_components(parse_permutation("31248657")) == "312/4/8657");
  CHECK(format_components(parse_permutation("341278659")) == "3412/7865/9");
  CHECK(format_components(parse_permutation("2,1,4,7,5,3,6,10,8,9")) == "2,1/4,7,5,3,6/10,8,9");
  CHECK(format_components(parse_permutation("321")) == "321");
  CHECK(components(Permutation::identity(4)).size() == 4);

  const auto c = component_containing(parse_permutation("341278659"), 6);
  CHECK(c.start() == 5);
  CHECK(c.end() == 8);
  CHECK(c.subword() == std::vector<int>{7, 8, 6, 5});
  CHECK(c.min_value() == 5);
  CHECK(c.contains_value(8));
  CHECK_FALSE(c.contains_value(9));
  CHECK(Component::starting_at(parse_permutation("341278659"), 5) == c);
  CHECK(format_marked_component(c) == "3412/[7865]/9");
}

TEST_CASE("components agree with the set-equality definition") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : oracle::all_perms(n)) {
      REQUIRE(bounds(components(Permutation(w))) == oracle::component_blocks(w));
    }
  }
}

TEST_CASE("malformed components are rejected") {
  const auto host = parse_permutation("321");
  CHECK_THROWS_AS(Component(host, 2, 2), std::invalid_argument);  // "2" alone is not a block of 321
  CHECK_THROWS_AS(Component(host, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Component(host, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Component(host, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(Component(parse_permutation("2143"), 1, 4), std::invalid_argument);  // not minimal
  CHECK_THROWS_AS(Component::starting_at(host, 2), std::invalid_argument);
  CHECK_THROWS_AS(Component::starting_at(host, 4), std::invalid_argument);
  CHECK_NOTHROW(Component(host, 1, 3));
}

TEST_CASE("inversion numbers and sequences") {
  const auto w = parse_permutation("3152476");
  std::vector<int> got;
  for (int i = 1; i <= 7; ++i) got.push_back(inversion_number(i, w));
  CHECK(got == std::vector<int>{0, 0, 2, 0, 2, 0, 1});
  CHECK(inversion_number(3, parse_permutation("321")) == 2);
  CHECK(inversion_number(1, parse_permutation("321")) == 0);

  const auto a = inv_seq(parse_permutation("41532"));
  CHECK(std::vector<int>(a.entries().begin(), a.entries().end()) == std::vector<int>{0, 0, 1, 3, 2});
  CHECK(perm_from_inv_seq(a) == parse_permutation("41532"));
  const auto b = inv_seq(parse_permutation("341278659"));
  CHECK(std::vector<int>(b.entries().begin(), b.entries().end()) == std::vector<int>{0, 0, 2, 2, 0, 1, 2, 2, 0});

  CHECK(perm_from_inv_seq(InversionSequence({0, 0, 1, 3, 2})) == parse_permutation("41532"));
  CHECK(perm_from_inv_seq(InversionSequence({0, 1, 0, 1, 1, 0, 3, 0, 0, 2})) ==
        parse_permutation("2,1,4,7,5,3,6,10,8,9"));

  CHECK_THROWS_AS(InversionSequence({1}), std::invalid_argument);
  CHECK_THROWS_AS(InversionSequence({0, -1}), std::invalid_argument);
  CHECK_THROWS_AS(InversionSequence({0, 1, 3}), std::invalid_argument);
}

TEST_CASE("inversion sequences round-trip on every permutation") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : oracle::all_perms(n)) {
      const Permutation p(w);
      const auto a = inv_seq(p);
      const auto t = oracle::inversion_table(w);
      REQUIRE(std::vector<int>(a.entries().begin(), a.entries().end()) == t);
      REQUIRE(perm_from_inv_seq(a) == p);
    }
  }
}

TEST_CASE("cyclic parking functions") {
  CHECK(is_cyclic_pf(make_preference({4, 4, 6, 6, 7, 9, 7, 1, 2, 1})) == 8);
  CHECK(is_cyclic_pf(make_preference({1, 2, 3, 4})) == 1);
  CHECK(is_cyclic_pf(make_preference({1, 1, 1, 1})) == 1);
  CHECK_FALSE(is_cyclic_pf(make_preference({2, 1, 2, 2})).has_value());
  CHECK_FALSE(is_cyclic_pf(make_preference({2, 2, 2})).has_value());  // not a parking function

  CHECK(cyclic_fibre_size(1, 3) == 6);
  CHECK(cyclic_fibre_size(2, 3) == 2);
  CHECK(cyclic_fibre_size(3, 3) == 2);
  CHECK(cyclic_fibre_size(8, 10) == 30240);
  CHECK_THROWS_AS(cyclic_fibre_size(4, 3), std::invalid_argument);

  const std::vector<Count> totals{1, 3, 10, 40, 192, 1092, 7248};
  for (int n = 1; n <= 7; ++n) CHECK(cyclic_total_count(n) == totals[n - 1]);
  for (int n = 1; n <= 6; ++n) CHECK(count_cyclic_pf_brute(n) == totals[n - 1]);
  CHECK_THROWS_AS(cyclic_total_count(0), std::invalid_argument);
}

TEST_CASE("per-start counts and the component total agree with exhaustion") {
  for (int n = 1; n <= 6; ++n) {
    std::map<int, Count> by_start;
    oracle::for_each_pref(n, [&](const oracle::Word& p) {
      const auto o = oracle::park(p, nullptr);
      if (!o) return;
      if (*o == oracle::increasing_cycle((*o)[0], n)) ++by_start[(*o)[0]];
    });
    Count components_total = 0;
    for (const auto& w : oracle::all_perms(n)) components_total += oracle::component_blocks(w).size();
    Count sum = 0;
    for (int i = 1; i <= n; ++i) {
      CHECK(cyclic_fibre_size(i, n) == by_start[i]);
      sum += by_start[i];
    }
    CHECK(sum == components_total);
  }
}

TEST_CASE("psi on the worked example") {
  const auto p = make_preference({4, 4, 6, 6, 7, 9, 7, 1, 2, 1});
  const auto c = psi(p);
  CHECK(c.underlying() == parse_permutation("2,1,4,7,5,3,6,10,8,9"));
  CHECK(c.subword() == std::vector<int>{10, 8, 9});
  CHECK(format_marked_component(c) == "2,1/4,7,5,3,6/[10,8,9]");
  CHECK(psi_inverse(c) == p);

  const auto q = psi_inverse(Component::starting_at(parse_permutation("341278659"), 5));
  CHECK(q == make_preference({6, 7, 6, 7, 1, 1, 1, 2, 5}));
  CHECK(is_cyclic_pf(q) == 5);

  CHECK_THROWS_WITH_AS(psi(make_preference({2, 1, 2, 2})), "outcome 2134 is not an increasing cycle",
                       std::invalid_argument);
  CHECK_THROWS_AS(psi(make_preference({2, 2})), std::invalid_argument);
}

TEST_CASE("psi is a bijection onto components (n <= 6)") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::pair<oracle::Word, int>> images;
    std::size_t cyclic = 0;
    for_each_preference(n, [&](const ParkingPreference& p) {
      const auto start = is_cyclic_pf(p);
      if (!start) return;
      ++cyclic;
      const auto c = psi(p);
      REQUIRE(c.contains_value(*start));
      REQUIRE(psi_inverse(c) == p);
      // Total displacement equals the inversion count of the host.
      const auto w = c.underlying().word();
      const auto t = oracle::inversion_table({w.begin(), w.end()});
      int inv = 0;
      for (int x : t) inv += x;
      REQUIRE(total_displacement(classical_park(p)) == inv);
      images.insert({{w.begin(), w.end()}, c.start()});
    });
    REQUIRE(images.size() == cyclic);
    std::size_t all_components = 0;
    for (const auto& w : oracle::all_perms(n)) {
      for (auto [s, e] : oracle::component_blocks(w)) {
        ++all_components;
        const Component c(Permutation(w), s, e);
        REQUIRE(psi(psi_inverse(c)) == c);
      }
    }
    REQUIRE(all_components == cyclic);
  }
}

TEST_CASE("table of cyclic parking functions for n = 3") {
  const auto rows = cyclic_table(3);
  REQUIRE(rows.size() == 10);
  CHECK(rows.front().preference == make_preference({1, 1, 1}));
  CHECK(rows.front().outcome == parse_permutation("123"));
  CHECK(rows.front().host == parse_permutation("321"));
  CHECK(format_marked_component(rows.front().component) == "[321]");
  int previous_start = 0;
  for (const auto& r : rows) {
    CHECK(r.outcome(1) >= previous_start);
    previous_start = r.outcome(1);
    CHECK(psi(r.preference) == r.component);
    CHECK(std::vector<int>(r.displacement) == classical_park(r.preference).success().displacement);
  }
  CHECK(rows.back().outcome == parse_permutation("312"));
}
