#include "parking/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace parking {

namespace {

[[noreturn]] void bad_line(int line_no, const std::string& what) {
  throw std::invalid_argument("graph file line " + std::to_string(line_no) + ": " + what);
}

int parse_size(std::string_view text, std::string_view what) {
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(std::string(text), &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed size in " + std::string(what));
  }
  return n;
}

}  // namespace

FriendshipGraph read_graph(std::istream& in) {
  std::optional<int> n;
  std::vector<FriendshipGraph::Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first.front() == '#') continue;

    if (!n) {
      int count = 0;
      std::string extra;
      if (first != "n" || !(fields >> count) || (fields >> extra)) {
        bad_line(line_no, "expected header 'n <count>'");
      }
      if (count < 1) bad_line(line_no, "vertex count must be positive");
      n = count;
      continue;
    }

    std::istringstream edge_fields(line);
    int u = 0, v = 0;
    std::string extra;
    if (!(edge_fields >> u >> v) || (edge_fields >> extra)) bad_line(line_no, "expected edge 'u v'");
    edges.emplace_back(u, v);
  }
  if (!n) throw std::invalid_argument("graph file has no 'n <count>' header");
  return FriendshipGraph(*n, edges);
}

void write_graph(std::ostream& out, const FriendshipGraph& g) {
  out << "n " << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

FriendshipGraph parse_graph_spec(std::string_view spec) {
  if (spec == "fig4") return example_graph_8();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("graph spec '" + std::string(spec) +
                                "' must be fig4 or <family>:<n> or file:<path>");
  }
  const std::string_view family = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  if (family == "file") {
    std::ifstream in{std::string(arg)};
    if (!in) throw std::invalid_argument("cannot open graph file '" + std::string(arg) + "'");
    return read_graph(in);
  }
  return graph_generator(family, parse_size(arg, spec));
}

std::optional<int> cycle_size_of_spec(std::string_view spec) {
  constexpr std::string_view prefix = "cycle:";
  if (spec.substr(0, prefix.size()) != prefix) return std::nullopt;
  return parse_size(spec.substr(prefix.size()), spec);
}

}  // namespace parking
