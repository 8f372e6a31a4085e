#pragma once

// Lets doctest print 128-bit counts in failure messages.

#include <doctest.h>

#include "parking/count.hpp"

namespace doctest {
template <>
struct StringMaker<unsigned __int128> {
  static String convert(unsigned __int128 v) { return parking::to_string(v).c_str(); }
};
}  // namespace doctest
