#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "parking/core.hpp"

namespace parking {

/// Reads the plain-text graph format:
///
///   # comment
///   n 4
///   1 2
///   2 3
///
/// The first non-blank, non-comment line must be `n <count>`; every later
/// line is one edge `u v`. Throws std::invalid_argument with the offending
/// line number on malformed input.
FriendshipGraph read_graph(std::istream& in);

void write_graph(std::ostream& out, const FriendshipGraph& g);

/// Accepts `cycle:<n>`, `complete:<n>`, `path:<n>`, `star:<n>`, `empty:<n>`,
/// `fig4` and `file:<path>`.
FriendshipGraph parse_graph_spec(std::string_view spec);

/// When `spec` names the cycle family, returns its size.
std::optional<int> cycle_size_of_spec(std::string_view spec);

}  // namespace parking
