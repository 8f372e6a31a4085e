#pragma once

#include <cstdint>
#include <string>

namespace parking {

// Enumeration results. 128 bits covers every factorial product up to n = 33;
// all arithmetic on counts goes through the checked helpers below.
using Count = unsigned __int128;

/// Throws std::overflow_error instead of wrapping.
Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

/// Divides and throws std::domain_error when `den` does not divide `num`.
Count exact_div(Count num, Count den);

Count factorial(int n);

/// n^k with overflow checking.
Count power(Count n, int k);

std::string to_string(Count value);

inline bool fits_u64(Count value) { return value <= UINT64_MAX; }

}  // namespace parking
