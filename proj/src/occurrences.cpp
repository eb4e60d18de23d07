#include "tmsets/occurrences.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "tmsets/errors.hpp"

namespace tmsets {

namespace {

// Occurrence test at a position known to fit in 64 bits.
inline bool occurs_at(uint64_t n, const BinaryWord& u) {
  for (size_t j = 0; j < u.size(); ++j) {
    int letter = std::popcount(n + j) & 1;
    if (letter != (u[j] - '0')) return false;
  }
  return true;
}

}  // namespace

std::vector<uint64_t> occurrences(const Factor& u, uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("occurrences: bound must be >= 1");
  std::vector<uint64_t> out;
  for (uint64_t n = 0; n < bound; ++n) {
    if (occurs_at(n, u.word())) out.push_back(n);
  }
  return out;
}

bool occurrence_parity_check(Nat n, const Factor& u) {
  const BinaryWord& w = u.word();
  for (size_t j = 0; j < w.size(); ++j) {
    if (parity_of_support(n + j) != w[j] - '0') return false;
  }
  return true;
}

EndingPattern ending_pattern(const Factor& u, uint64_t bound) {
  if (is_prefix_of_t(u.word()) || is_prefix_of_tbar(u.word())) {
    throw std::invalid_argument(
        "ending_pattern: inapplicable to prefixes of T or of Tbar");
  }
  // Per occurrence x: the 2-adic valuation v (x ends in 1 0^v) and whether
  // the bit just above it is set (x ends in 11 0^v).
  struct Ending {
    uint32_t valuation;
    bool upper_bit;
  };
  std::vector<Ending> seen;
  for (uint64_t n = 1; n < bound; ++n) {
    if (!occurs_at(n, u.word())) continue;
    uint32_t v = static_cast<uint32_t>(std::countr_zero(n));
    bool upper = v + 1 < 64 && ((n >> (v + 1)) & 1) != 0;
    seen.push_back({v, upper});
  }
  if (seen.empty()) {
    throw not_found_error("ending_pattern: no occurrence of \"" + u.word() +
                          "\" below " + std::to_string(bound));
  }
  uint32_t vmin = seen.front().valuation, vmax = vmin;
  for (const Ending& e : seen) {
    vmin = std::min(vmin, e.valuation);
    vmax = std::max(vmax, e.valuation);
  }
  uint64_t count = seen.size();
  if (vmax == vmin) {
    bool all_upper = true;
    for (const Ending& e : seen) all_upper &= e.upper_bit;
    // When every occurrence ends in 11 0^k the data cannot rule out a
    // Double(k) whose 1 0^{k+1} ending lies above the bound; for k >= 1 a
    // truncated Double(k-1) is likewise indistinguishable.
    return {EndingCase::kSingle, vmin, all_upper || vmin >= 1, count};
  }
  if (vmax == vmin + 1) {
    for (const Ending& e : seen) {
      if (e.valuation == vmin && !e.upper_bit) {
        throw invariant_violation("ending_pattern: \"" + u.word() +
                                  "\" has an occurrence ending 01 0^" +
                                  std::to_string(vmin) +
                                  " alongside valuation " +
                                  std::to_string(vmax));
      }
    }
    return {EndingCase::kDouble, vmin, false, count};
  }
  throw invariant_violation("ending_pattern: occurrences of \"" + u.word() +
                            "\" span valuations " + std::to_string(vmin) +
                            ".." + std::to_string(vmax));
}

std::optional<uint32_t> tau_power_aba_prefix(const Factor& u) {
  const BinaryWord& w = u.word();
  uint32_t max_n = static_cast<uint32_t>(std::bit_width(w.size() - 1)) + 1;
  for (uint32_t n = 0; n <= max_n; ++n) {
    for (const char* seed : {"010", "101"}) {
      BinaryWord image = apply_morphism(seed, n);
      if (image.size() >= w.size() && image.compare(0, w.size(), w) == 0) {
        return n;
      }
    }
  }
  return std::nullopt;
}

const char* to_string(FactorClass c) {
  switch (c) {
    case FactorClass::kPrefixOfT_IP: return "PrefixOfT_IP";
    case FactorClass::kPrefixOfTbar_InfFSBig: return "PrefixOfTbar_InfFSBig";
    case FactorClass::kTwoNotThreeSummable: return "TwoNotThreeSummable";
    case FactorClass::kNotTwoSummable: return "NotTwoSummable";
  }
  return "?";
}

FactorClass classify_factor(const Factor& u) {
  if (is_prefix_of_t(u.word())) return FactorClass::kPrefixOfT_IP;
  if (is_prefix_of_tbar(u.word())) return FactorClass::kPrefixOfTbar_InfFSBig;
  if (tau_power_aba_prefix(u).has_value()) {
    return FactorClass::kTwoNotThreeSummable;
  }
  return FactorClass::kNotTwoSummable;
}

}  // namespace tmsets
