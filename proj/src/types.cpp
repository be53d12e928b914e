#include "dcl/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dcl {

std::string_view error_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::EvenT: return "EvenT";
  case ErrorCode::TooSmallT: return "TooSmallT";
  case ErrorCode::BudgetTooSmall: return "BudgetTooSmall";
  case ErrorCode::NotPaperForm: return "NotPaperForm";
  case ErrorCode::NotChorded: return "NotChorded";
  case ErrorCode::InvariantBreach: return "InvariantBreach";
  case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
  case ErrorCode::Degenerate: return "Degenerate";
  case ErrorCode::NotMaterializable: return "NotMaterializable";
  case ErrorCode::TooLarge: return "TooLarge";
  case ErrorCode::SinkFailure: return "SinkFailure";
  case ErrorCode::OutOfRange: return "OutOfRange";
  case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

std::string to_string(i128 value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  // Work with negative magnitudes so INT128_MIN does not overflow.
  i128 v = negative ? value : -value;
  std::string out;
  while (v != 0) {
    int digit = -static_cast<int>(v % 10);
    out.push_back(static_cast<char>('0' + digit));
    v /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

i128 parse_i128(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::BadInput, "empty integer");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size())
    throw Error(ErrorCode::BadInput, "no digits in '" + std::string(text) + "'");
  i128 value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9')
      throw Error(ErrorCode::BadInput, "not an integer: '" + std::string(text) + "'");
    i128 next;
    if (__builtin_mul_overflow(value, 10, &next) ||
        __builtin_sub_overflow(next, c - '0', &value))
      throw Error(ErrorCode::BadInput, "integer out of range: '" + std::string(text) + "'");
  }
  if (!negative) {
    if (value == std::numeric_limits<i128>::min())
      throw Error(ErrorCode::BadInput, "integer out of range: '" + std::string(text) + "'");
    value = -value;
  }
  return value;
}

i128 isqrt(i128 value) {
  if (value < 0) throw Error(ErrorCode::BadInput, "isqrt of negative value");
  if (value < 2) return value;
  // Seed from long double, then correct; the seed is within a few units.
  i128 x = static_cast<i128>(std::sqrt(static_cast<long double>(value)));
  while (x > 0 && x * x > value) --x;
  while ((x + 1) * (x + 1) <= value) ++x;
  return x;
}

bool fits_i64(i128 value) {
  return value >= std::numeric_limits<i64>::min() &&
         value <= std::numeric_limits<i64>::max();
}

} // namespace dcl
