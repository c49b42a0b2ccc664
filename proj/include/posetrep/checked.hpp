#pragma once

#include <cstdint>

#include "posetrep/errors.hpp"

namespace posetrep {

using Int = std::int64_t;

// Exact signed 64-bit helpers. Every arithmetic path in the library goes
// through these: a result that does not fit raises OverflowError instead of
// wrapping.

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in addition");
  }
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in subtraction");
  }
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

}  // namespace posetrep
