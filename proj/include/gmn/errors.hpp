#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace gmn {

/// Malformed input text; `position` is a 0-based offset into the input.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

/// 64-bit exponent arithmetic left the representable range.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void ensure(bool cond, const char* what) {
  if (!cond) throw InternalError(what);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("exponent overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exponent overflow in multiplication");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw OverflowError("exponent overflow in negation");
  return -a;
}

/// Floor division: quotient rounded toward -infinity, remainder in [0, d).
inline std::int64_t floor_div(std::int64_t x, std::int64_t d) {
  std::int64_t q = x / d;
  if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
  return q;
}

inline std::int64_t floor_mod(std::int64_t x, std::int64_t d) {
  return x - floor_div(x, d) * d;
}

}  // namespace gmn
