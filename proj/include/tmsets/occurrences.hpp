#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tmsets/word.hpp"

namespace tmsets {

// All positions n < bound where u occurs in T, ascending. Enumeration uses
// the digit-parity criterion per position (no giant prefix materialization),
// so bounds up to 2^30 are reachable.
std::vector<uint64_t> occurrences(const Factor& u, uint64_t bound);

// True iff #supp(n + j) == u_{j+1} (mod 2) for every letter of u, which is
// exactly "u occurs at position n".
bool occurrence_parity_check(Nat n, const Factor& u);

// Shape of the binary endings of the occurrences of a non-prefix factor:
// either every occurrence ends in 1 0^k, or every occurrence ends in 11 0^k
// or 1 0^{k+1} with both endings realized.
enum class EndingCase { kSingle, kDouble };

struct EndingPattern {
  EndingCase kind;
  uint32_t k = 0;
  // Set when the observations below the bound are also consistent with a
  // Double pattern whose second ending simply was not seen yet; the Single
  // verdict is then provisional.
  bool low_confidence = false;
  uint64_t occurrences_checked = 0;

  bool operator==(const EndingPattern& o) const {
    return kind == o.kind && k == o.k;
  }
};

// Infers the ending pattern from every occurrence of u below bound.
// Rejects prefixes of T and of Tbar (their occurrence sets include 0 and do
// not follow the two shapes), errors if no occurrence lies below bound, and
// throws invariant_violation if the observations fit neither shape.
EndingPattern ending_pattern(const Factor& u, uint64_t bound);

// Smallest n >= 0 such that u is a prefix of tau^n(010) or of tau^n(101),
// if any. Once 2^n >= |u| those prefixes stabilize to prefixes of T or Tbar,
// so the scan stops at ceil(log2 |u|) + 1.
std::optional<uint32_t> tau_power_aba_prefix(const Factor& u);

enum class FactorClass {
  kPrefixOfT_IP,
  kPrefixOfTbar_InfFSBig,
  kTwoNotThreeSummable,
  kNotTwoSummable,
};

const char* to_string(FactorClass c);

// The three-way (four-label) classification of occurrence sets:
// prefixes of T give IP-sets, prefixes of Tbar give sets that are infinite
// FS-big without being IP, and every other factor is not 3-summable, with
// 2-summability deciding between the last two labels.
FactorClass classify_factor(const Factor& u);

}  // namespace tmsets
