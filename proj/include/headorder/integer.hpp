#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "headorder/error.hpp"

namespace headorder {

using Int = std::int64_t;

// Checked arithmetic: every exponent computation goes through these so that
// results are exact or an Overflow error is raised.
inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "multiplication");
  return r;
}

// Floor division (rounds toward negative infinity), b != 0.
inline Int floor_div(Int a, Int b) {
  if (b == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Representative in [0, m).
inline Int mod(Int a, Int m) {
  if (m <= 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

// Inverse of a modulo m in [0, m); m == 1 gives 0.
inline Int inverse_mod(Int a, Int m) {
  if (m <= 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  Int old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw Error(ErrorKind::NotCoprime,
                std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return mod(old_s, m);
}

inline Int ipow(Int base, Int exp) {
  Int r = 1;
  for (Int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

}  // namespace headorder
