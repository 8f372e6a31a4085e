// parking: command-line front end for the parking-function library.
//
// Exit codes: 0 success, 1 domain failure (a car failed to park, outcome not
// Hamiltonian, a check failed), 2 usage error.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "parking/classical.hpp"
#include "parking/cycle.hpp"
#include "parking/cyclic.hpp"
#include "parking/friendship.hpp"
#include "parking/graph_io.hpp"
#include "parking/report.hpp"
#include "parking/structure.hpp"
#include "parking/verify.hpp"

using nlohmann::json;
using namespace parking;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Options {
  bool json = false;

  std::string mode;
  std::string preference;
  std::string graph;

  std::string outcome;
  bool want_count = false;
  bool want_sets = false;
  bool want_list = false;

  std::string target;
  int n = 0;
  bool formula = false;
  bool brute = false;
  bool both = false;
  unsigned workers = 0;
  bool force = false;

  std::string direction;
  std::string perm;
  int start = 0;

  std::string suite;
  std::string range = "1..5";
};

class Output {
public:
  Output(std::string command, bool as_json)
      : as_json_(as_json), began_(std::chrono::steady_clock::now()) {
    report_.command = std::move(command);
  }

  json& inputs() { return report_.inputs; }
  json& result() { return report_.result; }
  std::ostream& text() { return text_; }

  // Progress notes go to stdout in text mode and stderr in JSON mode, so that
  // stdout stays a single JSON document.
  std::ostream& note() { return as_json_ ? std::cerr : std::cout; }

  int finish(int code) {
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - began_).count();
    if (as_json_) {
      std::cout << json(report_).dump() << '\n';
    } else {
      std::cout << text_.str();
    }
    return code;
  }

  int fail(const std::string& message) {
    report_.result["error"] = message;
    text_ << "error: " << message << '\n';
    return finish(kFailure);
  }

private:
  bool as_json_;
  std::chrono::steady_clock::time_point began_;
  RunReport report_;
  std::ostringstream text_;
};

json spot_sets_json(const FibreCharacterisation& fc) {
  json sets = json::array();
  for (const auto& s : fc.spot_sets) sets.push_back({s.lo, s.hi});
  return sets;
}

std::string interval_text(const SpotInterval& s) {
  if (s.lo == s.hi) return "{" + std::to_string(s.lo) + "}";
  return "[" + std::to_string(s.lo) + ", " + std::to_string(s.hi) + "]";
}

SearchOptions search_options(const Options& o) {
  SearchOptions opts;
  opts.max_simulations = max_simulations_from_env();
  opts.force = o.force;
  opts.workers = o.workers;
  return opts;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("size range '" + text + "' must look like 1..5");
  }
}

int cmd_park(const Options& o) {
  Output out("park", o.json);
  out.inputs() = {{"mode", o.mode}, {"preference", o.preference}};
  const auto p = make_preference(parse_int_list(o.preference));
  std::optional<ParkOutcome> outcome;
  if (o.mode == "friendship") {
    if (o.graph.empty()) throw std::invalid_argument("friendship mode needs -g <graph>");
    out.inputs()["graph"] = o.graph;
    outcome = friendship_park(p, parse_graph_spec(o.graph));
  } else {
    if (!o.graph.empty()) throw std::invalid_argument("classical mode takes no graph");
    outcome = classical_park(p);
  }

  auto& r = out.result();
  r["mode"] = o.mode;
  if (!outcome->ok()) {
    r["status"] = "failure";
    r["failed_car"] = outcome->failure().car;
    out.text() << "car " << outcome->failure().car << " failed\n";
    return out.finish(kFailure);
  }
  const auto& s = outcome->success();
  r["status"] = "success";
  r["outcome"] = s.outcome.word();
  r["displacement"] = s.displacement;
  r["total_displacement"] = total_displacement(*outcome);
  out.text() << "outcome: " << s.outcome << '\n'
             << "displacement: " << format_tuple(s.displacement) << '\n'
             << "total displacement: " << total_displacement(*outcome) << '\n';
  return out.finish(kOk);
}

int cmd_fibre(const Options& o) {
  Output out("fibre", o.json);
  out.inputs() = {{"graph", o.graph}, {"outcome", o.outcome}};
  const auto g = parse_graph_spec(o.graph);
  const auto perm = parse_permutation(o.outcome);
  if (perm.size() != g.size()) throw std::invalid_argument("outcome size differs from the graph size");
  const bool all = !o.want_count && !o.want_sets && !o.want_list;
  out.inputs()["view"] = o.want_list ? "list" : o.want_sets ? "sets" : o.want_count ? "count" : "default";

  std::optional<FibreCharacterisation> fc;
  try {
    fc = fibre_characterisation(perm, g);
  } catch (const NotHamiltonianPath& e) {
    return out.fail(e.what());
  }
  auto& r = out.result();
  r["outcome"] = perm.word();
  if (all || o.want_sets) {
    r["spot_sets"] = spot_sets_json(*fc);
    for (int i = 1; i <= perm.size(); ++i) {
      out.text() << "S_" << i << " = " << interval_text(fc->spot_sets[i - 1]) << '\n';
    }
  }
  const auto size = fibre_size(perm, g);
  if (all || o.want_count) {
    r["count"] = count_to_json(size);
    out.text() << (all ? "fibre size: " : "") << to_string(size) << '\n';
  }
  if (o.want_list) {
    json list = json::array();
    for (const auto& p : enumerate_fibre(perm, g)) {
      list.push_back(p.entries());
      out.text() << p << '\n';
    }
    r["preferences"] = std::move(list);
  }
  return out.finish(kOk);
}

int cmd_count(const Options& o) {
  Output out("count", o.json);
  const bool want_formula = o.formula || o.both || (!o.brute && !o.both);
  const bool want_brute = o.brute || o.both;
  out.inputs() = {{"target", o.target},
                  {"mode", o.both ? "both" : o.brute ? "brute" : "formula"},
                  {"list", o.want_list}};
  const auto opts = search_options(o);
  auto& r = out.result();

  std::optional<FriendshipGraph> g;
  int n = o.n;
  if (o.target == "fpf") {
    if (o.graph.empty()) throw std::invalid_argument("count fpf needs -g <graph>");
    out.inputs()["graph"] = o.graph;
    g = parse_graph_spec(o.graph);
    n = g->size();
  } else {
    if (n < 1) throw std::invalid_argument("count cyclic needs -n <size> with n >= 1");
    out.inputs()["n"] = n;
  }

  std::vector<Count> formulas;
  if (want_formula) {
    if (g) {
      formulas.push_back(total_fpf_count(*g));
      r["formula"] = count_to_json(formulas.back());
      out.text() << "formula (blocking sequences): " << to_string(formulas.back()) << '\n';
      if (const auto cn = cycle_size_of_spec(o.graph)) {
        formulas.push_back(cycle_total_count(*cn));
        r["cycle_formula"] = count_to_json(formulas.back());
        out.text() << "formula (cycle closed form): " << to_string(formulas.back()) << '\n';
      }
    } else {
      formulas.push_back(cyclic_total_count(n));
      r["formula"] = count_to_json(formulas.back());
      out.text() << "formula: " << to_string(formulas.back()) << '\n';
    }
  }

  if (want_brute || o.want_list) {
    check_search_cap(n, opts);
    out.note() << "search space: " << to_string(search_space_size(n)) << " preferences\n";
    PreferencePredicate pred;
    if (g) {
      pred = [&](const ParkingPreference& p) { return is_friendship_pf(p, *g); };
    } else {
      pred = [](const ParkingPreference& p) { return is_cyclic_pf(p).has_value(); };
    }
    Count brute = 0;
    if (o.want_list) {
      const auto list = filter_preferences(n, opts, pred);
      brute = list.size();
      json items = json::array();
      for (const auto& p : list) {
        items.push_back(p.entries());
        out.text() << p << '\n';
      }
      r["preferences"] = std::move(items);
    } else {
      brute = count_preferences(n, opts, pred);
    }
    r["brute"] = count_to_json(brute);
    out.text() << "brute force: " << to_string(brute) << '\n';
    if (want_formula) {
      bool agree = true;
      for (auto f : formulas) agree = agree && f == brute;
      r["agree"] = agree;
      out.text() << (agree ? "formula and brute force agree\n" : "MISMATCH between formula and brute force\n");
      if (!agree) return out.finish(kFailure);
    }
  }
  return out.finish(kOk);
}

int cmd_bijection(const Options& o) {
  Output out("bijection", o.json);
  out.inputs() = {{"direction", o.direction}};
  auto& r = out.result();
  if (o.direction == "psi") {
    if (o.preference.empty()) throw std::invalid_argument("psi needs -p <preference>");
    out.inputs()["preference"] = o.preference;
    const auto p = make_preference(parse_int_list(o.preference));
    std::optional<Component> c;
    try {
      c = psi(p);
    } catch (const std::invalid_argument& e) {
      return out.fail(e.what());
    }
    const auto s = classical_park(p).success();
    r["outcome"] = s.outcome.word();
    r["displacement"] = s.displacement;
    r["host"] = c->underlying().word();
    r["host_components"] = format_components(c->underlying());
    r["marked"] = format_marked_component(*c);
    r["component"] = c->subword();
    r["component_start"] = c->start();
    out.text() << "outcome: " << s.outcome << '\n'
               << "displacement: " << format_tuple(s.displacement) << '\n'
               << "host: " << format_components(c->underlying()) << '\n'
               << "marked: " << format_marked_component(*c) << '\n'
               << "component: " << format_word(c->subword()) << '\n';
    return out.finish(kOk);
  }

  if (o.perm.empty() || o.start == 0) throw std::invalid_argument("psi-inverse needs --perm and --start");
  out.inputs()["perm"] = o.perm;
  out.inputs()["start"] = o.start;
  const auto host = parse_permutation(o.perm);
  std::optional<Component> c;
  try {
    c = Component::starting_at(host, o.start);
  } catch (const std::invalid_argument& e) {
    return out.fail(e.what());
  }
  const auto p = psi_inverse(*c);
  const auto s = inv_seq(host);
  const auto park = classical_park(p).success();
  r["host_components"] = format_components(host);
  r["marked"] = format_marked_component(*c);
  r["component"] = c->subword();
  r["inversion_sequence"] = s.entries();
  r["preference"] = p.entries();
  r["outcome"] = park.outcome.word();
  out.text() << "host: " << format_components(host) << '\n'
             << "marked: " << format_marked_component(*c) << '\n'
             << "inversion sequence: " << format_tuple(s.entries()) << '\n'
             << "preference: " << p << '\n'
             << "outcome: " << park.outcome << '\n';
  return out.finish(kOk);
}

int cmd_verify(const Options& o) {
  Output out("verify", o.json);
  const auto [lo, hi] = parse_range(o.range);
  out.inputs() = {{"suite", o.suite}, {"n", {lo, hi}}};
  const auto checks = run_suite(parse_suite(o.suite), lo, hi, search_options(o));
  json rows = json::array();
  bool all_pass = true;
  for (const auto& c : checks) {
    all_pass = all_pass && c.passed;
    rows.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out.text() << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) out.text() << "  (" << c.detail << ")";
    out.text() << '\n';
  }
  out.result() = {{"checks", rows}, {"passed", all_pass}};
  out.text() << checks.size() << " checks, " << (all_pass ? "all passed" : "FAILURES") << '\n';
  return out.finish(all_pass ? kOk : kFailure);
}

int cmd_validate_report() {
  std::stringstream buffer;
  buffer << std::cin.rdbuf();
  json j;
  try {
    j = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    std::cerr << "invalid JSON: " << e.what() << '\n';
    return kFailure;
  }
  const auto errors = validate_run_report(j);
  for (const auto& e : errors) std::cerr << e << '\n';
  if (!errors.empty()) return kFailure;
  if (json(j.get<RunReport>()) != j) {
    std::cerr << "report does not round-trip\n";
    return kFailure;
  }
  std::cout << "valid\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parking functions: classical, friendship and cyclic"};
  app.require_subcommand(1);
  Options o;

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit one JSON run report"); };

  auto* park = app.add_subcommand("park", "Run a parking process");
  park->add_option("mode", o.mode, "classical or friendship")->required()->check(CLI::IsMember({"classical", "friendship"}));
  park->add_option("-p,--preference", o.preference, "Comma-separated preferences")->required();
  park->add_option("-g,--graph", o.graph, "Graph spec (friendship mode)");
  json_flag(park);

  auto* fibre = app.add_subcommand("fibre", "Outcome fibre of a Hamiltonian path");
  fibre->add_option("-g,--graph", o.graph, "Graph spec")->required();
  fibre->add_option("-o,--outcome", o.outcome, "Outcome permutation")->required();
  auto* f_count = fibre->add_flag("--count", o.want_count, "Print the fibre size");
  auto* f_sets = fibre->add_flag("--sets", o.want_sets, "Print the spot sets");
  auto* f_list = fibre->add_flag("--list", o.want_list, "List every preference in the fibre");
  f_count->excludes(f_sets)->excludes(f_list);
  f_sets->excludes(f_list);
  json_flag(fibre);

  auto* count = app.add_subcommand("count", "Count friendship or cyclic parking functions");
  count->add_option("target", o.target, "fpf or cyclic")->required()->check(CLI::IsMember({"fpf", "cyclic"}));
  count->add_option("-g,--graph", o.graph, "Graph spec (fpf)");
  count->add_option("-n", o.n, "Size (cyclic)");
  auto* c_formula = count->add_flag("--formula", o.formula, "Closed-form count (default)");
  auto* c_brute = count->add_flag("--brute", o.brute, "Exhaustive count over [n]^n");
  auto* c_both = count->add_flag("--both", o.both, "Both, failing on disagreement");
  c_formula->excludes(c_brute)->excludes(c_both);
  c_brute->excludes(c_both);
  count->add_flag("--list", o.want_list, "List the preferences found by brute force");
  count->add_option("--workers", o.workers, "Brute-force threads (0 = all cores)");
  count->add_flag("--force", o.force, "Ignore the exhaustive-search cap");
  json_flag(count);

  auto* bij = app.add_subcommand("bijection", "Cyclic parking functions <-> permutation components");
  bij->add_option("direction", o.direction, "psi or psi-inverse")->required()->check(CLI::IsMember({"psi", "psi-inverse"}));
  bij->add_option("-p,--preference", o.preference, "Preference (psi)");
  bij->add_option("--perm", o.perm, "Host permutation (psi-inverse)");
  bij->add_option("--start", o.start, "Component start position (psi-inverse)");
  json_flag(bij);

  auto* verify = app.add_subcommand("verify", "Run exhaustive cross-checks");
  verify->add_option("suite", o.suite, "all, props, table1, cycle or bijection")
      ->required()
      ->check(CLI::IsMember({"all", "props", "table1", "cycle", "bijection"}));
  verify->add_option("--n", o.range, "Size range, e.g. 1..5");
  verify->add_flag("--force", o.force, "Ignore the exhaustive-search cap");
  verify->add_option("--workers", o.workers, "Brute-force threads (0 = all cores)");
  json_flag(verify);

  auto* validate = app.add_subcommand("validate-report", "Check a JSON run report read from stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*park) return cmd_park(o);
    if (*fibre) return cmd_fibre(o);
    if (*count) return cmd_count(o);
    if (*bij) return cmd_bijection(o);
    if (*verify) return cmd_verify(o);
    if (*validate) return cmd_validate_report();
  } catch (const SearchCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
