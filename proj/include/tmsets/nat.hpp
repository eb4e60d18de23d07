#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tmsets {

// Exact nonnegative integer. 128 bits covers every witness constructed by
// this library (the largest default-bound witness needs about 60 bits).
using Nat = unsigned __int128;

// Sorted list of digit positions, least significant first. Kept as an index
// list rather than a bitmask so positions above machine width stay
// expressible.
using SupportSet = std::vector<uint32_t>;

constexpr uint64_t lo64(Nat n) { return static_cast<uint64_t>(n); }
constexpr uint64_t hi64(Nat n) { return static_cast<uint64_t>(n >> 64); }

constexpr int popcount(Nat n) {
  return std::popcount(lo64(n)) + std::popcount(hi64(n));
}

/// Number of bits needed to write n in binary; 0 for n = 0.
constexpr int bit_length(Nat n) {
  if (hi64(n) != 0) return 64 + std::bit_width(hi64(n));
  return std::bit_width(lo64(n));
}

/// Index of the lowest set bit. Requires n > 0.
constexpr int trailing_zeros(Nat n) {
  if (lo64(n) != 0) return std::countr_zero(lo64(n));
  return 64 + std::countr_zero(hi64(n));
}

constexpr bool test_bit(Nat n, uint32_t i) {
  return i < 128 && ((n >> i) & 1) != 0;
}

/// Positions of 1-bits of n, ascending. supp(19) = {0, 1, 4}; supp(0) = {}.
inline SupportSet binary_support(Nat n) {
  SupportSet out;
  while (n != 0) {
    uint32_t i = static_cast<uint32_t>(trailing_zeros(n));
    out.push_back(i);
    n &= n - 1;
  }
  return out;
}

/// Sum modulo 2 of the binary digits of n.
constexpr int parity_of_support(Nat n) { return popcount(n) & 1; }

/// Positions of nonzero digits in the base-3 expansion of n, ascending.
inline SupportSet ternary_support(Nat n) {
  SupportSet out;
  for (uint32_t pos = 0; n != 0; ++pos, n /= 3) {
    if (n % 3 != 0) out.push_back(pos);
  }
  return out;
}

/// Binary digits of n, most significant first. Requires n >= 1; there is no
/// canonical leading-1 form for zero, so callers handle that case themselves.
inline std::string binary_digits(Nat n) {
  if (n == 0) throw std::invalid_argument("binary_digits: n must be positive");
  std::string out;
  for (int i = bit_length(n) - 1; i >= 0; --i) {
    out.push_back(test_bit(n, static_cast<uint32_t>(i)) ? '1' : '0');
  }
  return out;
}

constexpr bool is_bit_string(std::string_view s) {
  for (char c : s) {
    if (c != '0' && c != '1') return false;
  }
  return true;
}

/// True iff the low |suffix| binary digits of n spell suffix. The suffix may
/// carry leading zeros; equivalently n mod 2^|suffix| equals its value.
inline bool ends_with(Nat n, std::string_view suffix) {
  if (n == 0) throw std::invalid_argument("ends_with: n must be positive");
  if (suffix.empty()) throw std::invalid_argument("ends_with: empty suffix");
  if (!is_bit_string(suffix)) {
    throw std::invalid_argument("ends_with: suffix must be a 01-string");
  }
  for (size_t j = 0; j < suffix.size(); ++j) {
    bool bit = test_bit(n, static_cast<uint32_t>(j));
    if (bit != (suffix[suffix.size() - 1 - j] == '1')) return false;
  }
  return true;
}

inline std::string to_string(Nat n) {
  if (n == 0) return "0";
  std::string out;
  while (n != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(n % 10)));
    n /= 10;
  }
  return {out.rbegin(), out.rend()};
}

}  // namespace tmsets
