#include "parking/count.hpp"

#include <algorithm>
#include <stdexcept>

namespace parking {

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count overflow in addition");
  return r;
}

Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count overflow in multiplication");
  return r;
}

Count exact_div(Count num, Count den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (num % den != 0) throw std::domain_error("inexact division of counts");
  return num / den;
}

Count factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Count r = 1;
  for (int k = 2; k <= n; ++k) r = checked_mul(r, static_cast<Count>(k));
  return r;
}

Count power(Count n, int k) {
  if (k < 0) throw std::domain_error("negative exponent");
  Count r = 1;
  for (int i = 0; i < k; ++i) r = checked_mul(r, n);
  return r;
}

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string s;
  while (value != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace parking
