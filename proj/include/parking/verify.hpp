#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parking/search.hpp"

namespace parking {

enum class Suite { All, Props, Table1, Cycle, Bijection };

/// Throws std::invalid_argument on an unknown name.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs the exhaustive cross-checks of `suite` for sizes lo..hi. Sweeps of
/// [n]^n respect opts; failures are reported, never thrown.
std::vector<CheckResult> run_suite(Suite suite, int lo, int hi, const SearchOptions& opts);

}  // namespace parking
