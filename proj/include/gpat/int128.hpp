#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gpat {

// All sequence and polynomial values in this library are exact integers.
// We use signed 128-bit arithmetic and treat overflow as a hard error:
// every sum/product goes through these checked helpers, never raw + or *.
using int128 = __int128;

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("int128 overflow in addition");
  return r;
}

inline int128 checked_sub(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("int128 overflow in subtraction");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("int128 overflow in multiplication");
  return r;
}

// Division that must leave no remainder (used where a formula is known to be
// integral, e.g. binomials and the ballot numbers). A remainder means the
// caller's math is wrong, so it is an error, not a truncation.
inline int128 exact_div(int128 a, int128 b) {
  if (b == 0) throw std::domain_error("exact_div: division by zero");
  if (a % b != 0) throw std::domain_error("exact_div: remainder is nonzero");
  return a / b;
}

inline bool fits_int64(int128 v) {
  return v >= INT64_MIN && v <= INT64_MAX;
}

inline std::string to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Peel digits from the absolute value; negate digit-wise to dodge -2^127.
  std::string digits;
  while (v != 0) {
    int d = static_cast<int>(v % 10);
    if (d < 0) d = -d;
    digits.push_back(static_cast<char>('0' + d));
    v /= 10;
  }
  if (neg) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

inline int128 parse_int128(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_int128: empty string");
  std::size_t i = 0;
  bool neg = text[0] == '-';
  if (neg) i = 1;
  if (i == text.size()) throw std::invalid_argument("parse_int128: no digits");
  int128 v = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9')
      throw std::invalid_argument(std::string("parse_int128: bad character '") + c + "'");
    v = checked_add(checked_mul(v, 10), neg ? -(c - '0') : (c - '0'));
  }
  return v;
}

}  // namespace gpat
