#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dcl {

using i64 = std::int64_t;
using u64 = std::uint64_t;
// Vertex budgets reach ~10^21 for r = 10^6, past the 64-bit range.
__extension__ typedef __int128 i128;

enum class ErrorCode {
  EvenT,
  TooSmallT,
  BudgetTooSmall,
  NotPaperForm,
  NotChorded,
  InvariantBreach,
  ArithmeticOverflow,
  Degenerate,
  NotMaterializable,
  TooLarge,
  SinkFailure,
  OutOfRange,
  BadInput,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::ArithmeticOverflow, "addition overflow");
  return r;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::ArithmeticOverflow, "multiplication overflow");
  return r;
}

inline i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorCode::ArithmeticOverflow, "subtraction overflow");
  return r;
}

std::string to_string(i128 value);

/// Parses a signed decimal integer; throws Error(BadInput) on anything else.
i128 parse_i128(std::string_view text);

/// floor(sqrt(value)) for value >= 0, exact.
i128 isqrt(i128 value);

bool fits_i64(i128 value);

} // namespace dcl
