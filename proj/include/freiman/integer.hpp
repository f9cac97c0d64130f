#pragma once

#include <cstdint>

#include "freiman/error.hpp"

namespace freiman {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

/// binomial(n, k) for n >= 0; zero when k < 0 or k > n.
Int binomial(Int n, Int k);

}  // namespace freiman
