// Brute-force reference implementations used only by tests. Each one takes
// the dumbest correct route so it stays independent of the library's search
// and enumeration paths.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tmsets/summability.hpp"
#include "tmsets/word.hpp"

namespace oracles {

// Occurrence positions found by materializing a prefix of T (doubling route)
// and string-matching, not by the digit-parity criterion.
inline std::vector<uint64_t> scan_occurrences(const std::string& u,
                                              uint64_t bound) {
  std::string w = tmsets::tm_prefix(bound + u.size());
  std::vector<uint64_t> out;
  for (uint64_t n = 0; n < bound; ++n) {
    if (w.compare(n, u.size(), u) == 0) out.push_back(n);
  }
  return out;
}

// All distinct factors of T with the given length range, via substrings of a
// long prefix.
inline std::vector<std::string> factors_up_to(size_t max_len,
                                              size_t window = 4096) {
  std::string w = tmsets::tm_prefix(window);
  std::set<std::string> seen;
  for (size_t len = 1; len <= max_len; ++len) {
    for (size_t n = 0; n + len <= w.size(); ++n) {
      seen.insert(w.substr(n, len));
    }
  }
  return {seen.begin(), seen.end()};
}

// Plain subset-sum check of uniqueness of finite sums.
inline bool ufs_brute(const std::vector<uint64_t>& xs) {
  std::set<uint64_t> sums;
  for (uint64_t mask = 1; mask < (uint64_t{1} << xs.size()); ++mask) {
    uint64_t s = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      if (mask & (uint64_t{1} << i)) s += xs[i];
    }
    if (!sums.insert(s).second) return false;
  }
  return true;
}

// Lexicographically least increasing k-tuple whose subset sums are distinct,
// within bound, and member-satisfying; found by odometer enumeration.
inline std::optional<std::vector<uint64_t>> least_witness_brute(
    const tmsets::MemberFn& member, uint32_t k, uint64_t bound) {
  std::vector<uint64_t> t(k);
  auto valid = [&]() {
    std::set<uint64_t> sums;
    for (uint64_t mask = 1; mask < (uint64_t{1} << k); ++mask) {
      uint64_t s = 0;
      for (uint32_t i = 0; i < k; ++i) {
        if (mask & (uint64_t{1} << i)) s += t[i];
      }
      if (s > bound || !member(s) || !sums.insert(s).second) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, uint32_t depth, uint64_t next) -> bool {
    if (depth == k) return valid();
    for (uint64_t x = next; x <= bound; ++x) {
      if (!member(x)) continue;  // terms are singleton sums
      t[depth] = x;
      if (self(self, depth + 1, x + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0, 1)) return std::nullopt;
  return t;
}

// Does this coloring of {1..m} contain FS of a k-term UFS sequence inside
// one color class? Direct tuple loops.
inline bool mono_fs_brute(const std::vector<uint8_t>& colors, uint32_t k) {
  uint32_t m = static_cast<uint32_t>(colors.size());
  std::vector<uint64_t> t(k);
  auto rec = [&](auto&& self, uint32_t depth, uint32_t next) -> bool {
    if (depth == k) {
      std::set<uint64_t> sums;
      for (uint64_t mask = 1; mask < (uint64_t{1} << k); ++mask) {
        uint64_t s = 0;
        for (uint32_t i = 0; i < k; ++i) {
          if (mask & (uint64_t{1} << i)) s += t[i];
        }
        if (s > m || !sums.insert(s).second) return false;
      }
      uint8_t c = colors[*sums.begin() - 1];
      for (uint64_t s : sums) {
        if (colors[s - 1] != c) return false;
      }
      return true;
    }
    for (uint32_t x = next; x <= m; ++x) {
      t[depth] = x;
      if (self(self, depth + 1, x + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 1);
}

// Least m <= max_m forcing a monochromatic k-term FS in every r-coloring,
// checked over all r^m colorings with no pruning.
inline std::optional<uint32_t> weak_schur_brute(uint32_t r, uint32_t k,
                                                uint32_t max_m) {
  for (uint32_t m = 1; m <= max_m; ++m) {
    uint64_t total = 1;
    for (uint32_t i = 0; i < m; ++i) total *= r;
    bool all_good = true;
    for (uint64_t code = 0; code < total && all_good; ++code) {
      std::vector<uint8_t> colors(m);
      uint64_t c = code;
      for (uint32_t i = 0; i < m; ++i, c /= r) {
        colors[i] = static_cast<uint8_t>(c % r + 1);
      }
      all_good = mono_fs_brute(colors, k);
    }
    if (all_good) return m;
  }
  return std::nullopt;
}

}  // namespace oracles
