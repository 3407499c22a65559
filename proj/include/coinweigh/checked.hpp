#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "coinweigh/errors.hpp"

namespace coinweigh {

// All totals and weights are 64-bit signed and overflow-checked. The closed
// forms grow like 8n^3/81, so anything up to n ~ 10^6 fits comfortably;
// beyond that we fail loudly instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
  return r;
}

inline Int checked_abs(Int a) {
  if (a == std::numeric_limits<Int>::min()) throw Overflow("integer overflow in abs");
  return a < 0 ? -a : a;
}

// Division that must be exact; a nonzero remainder means a formula is wrong.
inline Int exact_div(Int a, Int b) {
  if (b == 0) throw Error("division by zero");
  if (a % b != 0) throw Error("non-exact integer division");
  return a / b;
}

inline Int triangular(Int m) {
  return exact_div(checked_mul(m, m + 1), 2);
}

// C(s,3); zero for s < 3.
inline Int comb3(Int s) {
  if (s < 3) return 0;
  return exact_div(checked_mul(checked_mul(s, s - 1), s - 2), 6);
}

inline Int int_isqrt(Int x) {
  if (x < 0) throw OutOfRange("isqrt of negative value");
  Int r = static_cast<Int>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r > x / r) --r;
  while (r + 1 <= x / (r + 1)) ++r;
  return r;
}

// Index m with T_m == t, or -1 when t is not triangular.
inline Int triangular_index(Int t) {
  if (t < 0) return -1;
  Int m = (int_isqrt(8 * t + 1) - 1) / 2;
  return m * (m + 1) / 2 == t ? m : -1;
}

}  // namespace coinweigh
