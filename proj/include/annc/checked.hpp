#pragma once

#include <cstdint>

#include "annc/errors.hpp"

namespace annc {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("int64 overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticError("int64 overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("int64 overflow in multiplication");
  return r;
}

/// Exact division; throws when `den` does not divide `num`.
inline std::int64_t exact_div(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArithmeticError("division by zero");
  if (num % den != 0) {
    throw ArithmeticError("non-integral quotient " + std::to_string(num) + "/" + std::to_string(den));
  }
  return num / den;
}

inline std::int64_t sign_pow(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace annc
