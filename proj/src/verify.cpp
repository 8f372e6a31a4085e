#include "parking/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "parking/classical.hpp"
#include "parking/cycle.hpp"
#include "parking/cyclic.hpp"
#include "parking/friendship.hpp"
#include "parking/structure.hpp"

namespace parking {

Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "props") return Suite::Props;
  if (name == "table1") return Suite::Table1;
  if (name == "cycle") return Suite::Cycle;
  if (name == "bijection") return Suite::Bijection;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::All: return "all";
    case Suite::Props: return "props";
    case Suite::Table1: return "table1";
    case Suite::Cycle: return "cycle";
    case Suite::Bijection: return "bijection";
  }
  return "?";
}

namespace {

class Report {
public:
  explicit Report(std::vector<CheckResult>& out) : out_(out) {}

  void add(std::string name, bool passed, std::string detail = {}) {
    out_.push_back({std::move(name), passed, std::move(detail)});
  }

  // Pass when `failures` is zero; detail names the number of cases.
  void tally(std::string name, std::uint64_t cases, std::uint64_t failures) {
    add(std::move(name), failures == 0,
        std::to_string(cases) + " cases, " + std::to_string(failures) + " failures");
  }

private:
  std::vector<CheckResult>& out_;
};

std::string tag(int n) { return " [n=" + std::to_string(n) + "]"; }

std::vector<FriendshipGraph> graph_corpus(int n) {
  std::vector<FriendshipGraph> graphs;
  const int pairs = n * (n - 1) / 2;
  if (n <= 5) {
    for (unsigned long long mask = 0; mask < (1ULL << pairs); ++mask) graphs.push_back(graph_from_mask(n, mask));
    return graphs;
  }
  std::mt19937_64 rng(0x5eed0000ULL + n);
  const unsigned long long full = pairs >= 64 ? ~0ULL : (1ULL << pairs) - 1;
  for (int k = 0; k < 8; ++k) graphs.push_back(graph_from_mask(n, rng() & full));
  for (auto family : {"cycle", "complete", "path", "star"}) graphs.push_back(graph_generator(family, n));
  return graphs;
}

void props_suite(int n, Report& r) {
  std::uint64_t cases = 0, criterion_bad = 0, disp_bad = 0, pf_count = 0;
  for_each_preference(n, [&](const ParkingPreference& p) {
    ++cases;
    const auto o = classical_park(p);
    if (o.ok() != is_parking_function(p)) ++criterion_bad;
    if (!o.ok()) return;
    ++pf_count;
    const auto& s = o.success();
    for (int i = 1; i <= n; ++i) {
      if (s.displacement[i - 1] >= i || s.outcome.position_of(i) < p(i)) ++disp_bad;
    }
  });
  r.tally("rearrangement criterion agrees with classical simulation" + tag(n), cases, criterion_bad);
  const auto expected = power(n + 1, n - 1);
  r.add("classical parking function count is (n+1)^(n-1)" + tag(n), pf_count == expected,
        std::to_string(pf_count) + " vs " + to_string(expected));
  r.tally("classical displacement is an inversion sequence" + tag(n), pf_count, disp_bad);

  std::uint64_t graphs = 0, subset_bad = 0, same_outcome_bad = 0, ham_outcome_bad = 0, fibre_bad = 0,
                existence_bad = 0, first_car_bad = 0;
  bool cycle_witness = false;
  for (const auto& g : graph_corpus(n)) {
    ++graphs;
    const auto paths = hamiltonian_paths(g);
    std::map<Permutation, FibreCharacterisation> fibres;
    std::map<Permutation, std::uint64_t> hits;
    for (const auto& pi : paths) fibres.emplace(pi, fibre_characterisation(pi, g));
    std::uint64_t fpf = 0;
    const bool is_cycle = n >= 3 && g == graph_generator("cycle", n);
    for_each_preference(n, [&](const ParkingPreference& p) {
      const auto c = classical_park(p);
      const auto f = friendship_park(p, g);
      if (c.ok() && c.success().outcome.position_of(1) != p(1)) ++first_car_bad;
      if (c.ok() && is_hamiltonian_path(c.success().outcome, g)) {
        if (!f.ok() || f.success().outcome != c.success().outcome) ++same_outcome_bad;
      }
      if (!f.ok()) return;
      ++fpf;
      const auto& pi = f.success().outcome;
      if (pi.position_of(1) != p(1)) ++first_car_bad;
      if (!is_parking_function(p)) ++subset_bad;
      const auto it = fibres.find(pi);
      if (it == fibres.end()) {
        ++ham_outcome_bad;
        return;
      }
      for (int i = 1; i <= n; ++i) {
        if (!it->second.spot_sets[i - 1].contains(p(i))) {
          ++fibre_bad;
          break;
        }
      }
      ++hits[pi];
      if (is_cycle && c.ok() && !is_hamiltonian_path(c.success().outcome, g)) cycle_witness = true;
    });
    for (const auto& pi : paths) {
      if (static_cast<Count>(hits[pi]) != fibre_size(pi, g)) ++fibre_bad;
    }
    if (paths.empty() != (fpf == 0)) ++existence_bad;
  }
  r.tally("friendship parking functions are classical parking functions" + tag(n), graphs, subset_bad);
  r.tally("Hamiltonian classical outcome implies equal friendship outcome" + tag(n), graphs, same_outcome_bad);
  r.tally("friendship outcome is a Hamiltonian path" + tag(n), graphs, ham_outcome_bad);
  r.tally("fibres from blocking sequences equal simulated fibres" + tag(n), graphs, fibre_bad);
  r.tally("Hamiltonian path exists iff friendship parking functions exist" + tag(n), graphs, existence_bad);
  r.tally("car 1 parks at its preference" + tag(n), graphs, first_car_bad);
  if (n >= 4) {
    r.add("cycle witness: friendship pf whose classical outcome is not Hamiltonian" + tag(n), cycle_witness);
  }
}

std::vector<int> expected_cycle_blocking(const CyclicOutcome& c, int j) {
  const int n = c.n, i = c.start;
  auto run = [](int from, int to) {
    std::vector<int> v;
    for (int x = from; x <= to; ++x) v.push_back(x);
    return v;
  };
  auto down_to_one = [](int from) {
    std::vector<int> v;
    for (int x = from; x >= 1; --x) v.push_back(x);
    return v;
  };
  if (c.direction == Direction::Decreasing) {
    if (i == n) return {j};
    if (i == n - 1) {
      if (j <= n - 1) return {j};
      auto v = down_to_one(n - 1);
      v.push_back(n);
      return v;
    }
    if (j <= n - 2) return {j};
    auto v = down_to_one(i);
    v.push_back(n);
    if (j == n - 1) v.push_back(n - 1);
    return v;
  }
  if (j >= i) return run(i, j);
  if (i <= 3 || j <= 2) return run(1, j);
  auto v = run(1, j);
  v.insert(v.begin(), n);
  return v;
}

void cycle_suite(int n, const SearchOptions& opts, Report& r) {
  if (n < 3) return;
  const auto g = graph_generator("cycle", n);
  const auto brute = count_fpf_brute(g, opts);
  const auto formula = cycle_total_count(n);
  r.add("cycle total count formula equals brute force" + tag(n), formula == brute,
        to_string(formula) + " vs " + to_string(brute));

  std::map<Permutation, std::uint64_t> hits;
  for_each_preference(n, [&](const ParkingPreference& p) {
    const auto f = friendship_park(p, g);
    if (f.ok()) ++hits[f.success().outcome];
  });
  std::uint64_t bad = 0, shape_bad = 0, shape_cases = 0;
  Count closed_sum = 0;
  std::set<Permutation> expansions;
  for (const auto& c : cyclic_outcomes(n)) {
    const auto pi = expand_cyclic(c);
    expansions.insert(pi);
    const auto closed = cycle_fibre_size(c);
    closed_sum = checked_add(closed_sum, closed);
    if (closed != fibre_size(pi, g) || closed != static_cast<Count>(hits[pi])) ++bad;
    if (n >= 4) {
      for (int j = 1; j <= n; ++j) {
        ++shape_cases;
        if (blocking_sequence(j, pi, g).elements() != expected_cycle_blocking(c, j)) ++shape_bad;
      }
    }
  }
  r.tally("closed-form fibre sizes match product and brute force" + tag(n), 2 * n, bad);
  r.add("closed-form fibre sizes sum to the total" + tag(n), closed_sum == formula);
  const auto paths = hamiltonian_paths(g);
  r.add("Hamiltonian paths of the cycle are the 2n cyclic expansions" + tag(n),
        paths.size() == static_cast<std::size_t>(2 * n) &&
            std::set<Permutation>(paths.begin(), paths.end()) == expansions);
  if (n >= 4) r.tally("blocking sequences on the cycle match their closed forms" + tag(n), shape_cases, shape_bad);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[k] = k + 1;
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<InversionSequence> all_inversion_sequences(int n) {
  std::vector<InversionSequence> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(a);
    int k = n - 1;
    for (; k >= 0; --k) {
      if (a[k] < k) {
        ++a[k];
        break;
      }
      a[k] = 0;
    }
    if (k < 0) return out;
  }
}

void bijection_suite(int n, const SearchOptions& opts, Report& r) {
  const auto perms = all_permutations(n);
  Count component_total = 0;
  for (const auto& pi : perms) component_total = checked_add(component_total, components(pi).size());
  const auto formula = cyclic_total_count(n);
  const auto brute = count_cyclic_pf_brute(n, opts);
  r.add("cyclic count formula equals brute force and total components" + tag(n),
        formula == brute && formula == component_total,
        to_string(formula) + " / " + to_string(brute) + " / " + to_string(component_total));

  std::vector<std::uint64_t> by_start(static_cast<std::size_t>(n) + 1, 0);
  std::map<std::vector<int>, std::uint64_t> by_displacement;
  std::set<Component> images;
  std::uint64_t cyclic = 0, round_bad = 0, inv_bad = 0, min_bad = 0;
  for_each_preference(n, [&](const ParkingPreference& p) {
    const auto start = is_cyclic_pf(p);
    if (!start) return;
    ++cyclic;
    ++by_start[*start];
    const auto disp = classical_park(p).success().displacement;
    ++by_displacement[disp];
    const auto c = psi(p);
    images.insert(c);
    if (psi_inverse(c) != p) ++round_bad;
    if (c.min_value() != *start) ++min_bad;
    for (int j = 1; j <= n; ++j) {
      if (disp[j - 1] != inversion_number(j, c.underlying())) {
        ++inv_bad;
        break;
      }
    }
  });
  std::uint64_t fibre_bad = 0;
  for (int i = 1; i <= n; ++i) {
    if (static_cast<Count>(by_start[i]) != cyclic_fibre_size(i, n)) ++fibre_bad;
  }
  r.tally("cyclic fibre sizes (n+1-i)!(i-1)! match brute force" + tag(n), n, fibre_bad);
  r.tally("psi_inverse(psi(p)) = p" + tag(n), cyclic, round_bad);
  r.add("psi is injective" + tag(n), images.size() == cyclic);
  r.tally("displacement equals inversion number in the host" + tag(n), cyclic, inv_bad);
  r.tally("start of the cyclic outcome is the component minimum" + tag(n), cyclic, min_bad);

  std::uint64_t comps = 0, back_bad = 0, inv_round_bad = 0;
  for (const auto& pi : perms) {
    if (perm_from_inv_seq(inv_seq(pi)) != pi) ++inv_round_bad;
    for (const auto& c : components(pi)) {
      ++comps;
      const auto p = psi_inverse(c);
      if (!is_cyclic_pf(p) || psi(p) != c) ++back_bad;
    }
  }
  r.tally("psi(psi_inverse(c)) = c" + tag(n), comps, back_bad);

  std::uint64_t seq_bad = 0, remark_bad = 0;
  const auto seqs = all_inversion_sequences(n);
  for (const auto& a : seqs) {
    const auto pi = perm_from_inv_seq(a);
    if (inv_seq(pi) != a) ++seq_bad;
    const std::vector<int> key(a.entries().begin(), a.entries().end());
    const auto it = by_displacement.find(key);
    const std::uint64_t hits = it == by_displacement.end() ? 0 : it->second;
    if (hits != components(pi).size()) ++remark_bad;
  }
  r.tally("inversion sequence round trips" + tag(n), perms.size() + seqs.size(), inv_round_bad + seq_bad);
  r.tally("cyclic pfs per displacement equal components of its permutation" + tag(n), seqs.size(), remark_bad);
}

struct TableRow {
  const char* outcome;
  const char* preference;
  const char* displacement;
  const char* permutation;
  const char* marked;
};

constexpr TableRow kTableOne[] = {
    {"123", "(1,1,1)", "(0,1,2)", "321", "[321]"},
    {"123", "(1,1,2)", "(0,1,1)", "231", "[231]"},
    {"123", "(1,1,3)", "(0,1,0)", "213", "[21]/3"},
    {"123", "(1,2,1)", "(0,0,2)", "312", "[312]"},
    {"123", "(1,2,2)", "(0,0,1)", "132", "[1]/32"},
    {"123", "(1,2,3)", "(0,0,0)", "123", "[1]/2/3"},
    {"231", "(3,1,1)", "(0,0,1)", "132", "1/[32]"},
    {"231", "(3,1,2)", "(0,0,0)", "123", "1/[2]/3"},
    {"312", "(2,2,1)", "(0,1,0)", "213", "21/[3]"},
    {"312", "(2,3,1)", "(0,0,0)", "123", "1/2/[3]"},
};

void table_suite(Report& r) {
  const auto rows = cyclic_table(3);
  bool ok = rows.size() == std::size(kTableOne);
  std::string detail = std::to_string(rows.size()) + " rows";
  for (std::size_t k = 0; ok && k < rows.size(); ++k) {
    const auto& got = rows[k];
    const auto& want = kTableOne[k];
    ok = format_word(got.outcome.word()) == want.outcome &&
         format_tuple(got.preference.entries()) == want.preference &&
         format_tuple(got.displacement) == want.displacement &&
         format_word(got.host.word()) == want.permutation &&
         format_marked_component(got.component) == want.marked;
    if (!ok) detail = "row " + std::to_string(k + 1) + " differs";
  }
  r.add("cyclic parking function table for n=3", ok, detail);
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, int lo, int hi, const SearchOptions& opts) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("size range must satisfy 1 <= lo <= hi");
  check_search_cap(hi, opts);
  std::vector<CheckResult> out;
  Report r(out);
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Table1) table_suite(r);
  for (int n = lo; n <= hi; ++n) {
    if (all || suite == Suite::Props) props_suite(n, r);
    if (all || suite == Suite::Cycle) cycle_suite(n, opts, r);
    if (all || suite == Suite::Bijection) bijection_suite(n, opts, r);
  }
  return out;
}

}  // namespace parking
