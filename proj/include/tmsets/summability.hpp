#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tmsets/word.hpp"

namespace tmsets {

// Subset-sum enumeration is capped at 2^24 sums.
inline constexpr size_t kMaxUfsTerms = 24;
// Constructive witness builders stop at 20 terms.
inline constexpr uint32_t kMaxWitnessTerms = 20;

/// True iff all nonempty-subset sums of xs are pairwise distinct
/// (uniqueness of finite sums). xs nonempty, at most kMaxUfsTerms entries.
bool has_ufs(const std::vector<Nat>& xs);

// A strictly increasing sequence of positive integers satisfying uniqueness
// of finite sums, checked at construction.
class SumSequence {
 public:
  explicit SumSequence(std::vector<Nat> terms);

  const std::vector<Nat>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

 private:
  std::vector<Nat> terms_;
};

/// All 2^n - 1 nonempty-subset sums, sorted. The UFS invariant of the input
/// guarantees they are distinct; a duplicate would be a logic error and
/// throws invariant_violation.
std::vector<Nat> finite_sums(const SumSequence& xs);

using MemberFn = std::function<bool(uint64_t)>;

/// The lexicographically least increasing k-term sequence with UFS whose
/// 2^k - 1 subset sums all lie at or below `bound` and all satisfy `member`.
/// Depth-first over increasing terms; partial subset sums are kept within
/// bound, distinct, and member-satisfying incrementally, which is what makes
/// bound 2^16 practical at k <= 3. Returns nullopt when the exhaustive
/// search finds nothing (absence below a bound is not a proof of absence).
std::optional<SumSequence> find_k_summable_witness(const MemberFn& member,
                                                   uint32_t k, uint64_t bound);

bool is_k_summable_upto(const MemberFn& member, uint32_t k, uint64_t bound);

/// Membership test for the occurrence set of u, usable as a MemberFn.
MemberFn occurrence_member(const Factor& u);

/// Greedy IP witness for a prefix u of T: terms 3 * 2^{n_i} where each n_i
/// is the least exponent with 2^{n_i} > (sum of earlier terms) + |u| - 1.
/// Adding 2^{n+1} + 2^n to an occurrence m with 2^n > m + |u| - 1 adds two
/// fresh digits to every supp(m + j), so all 2^terms - 1 sums stay inside
/// the occurrence set; the construction self-verifies every sum and throws
/// invariant_violation if any fails.
SumSequence ip_witness_for_prefix(const Factor& u, uint32_t terms);

/// FS-big witness for a prefix u of Tbar: x_n with binary digits
/// 11 0^{2n+j} 1^{2k-1} 0^l, j = ceil(log2(2k-1)), l = ceil(log2 |u|).
/// Any sum of r <= 2k-1 distinct terms has digit-sum 2r + 2k - 1 (odd) and
/// ends in at least l zeros, hence is an occurrence of u. Verification is a
/// separate step: see verify_sum_family.
SumSequence fsbig_witness_for_tmbar_prefix(const Factor& u, uint32_t k,
                                           uint32_t num_terms);

/// True iff every sum of between 1 and max_terms distinct terms of xs is an
/// occurrence of u.
bool verify_sum_family(const Factor& u, const SumSequence& xs,
                       uint32_t max_terms);

/// Some nonempty subset of s whose sum is divisible by |s|. Follows the
/// constructive recursion C_{i+1} = C_i union (C_i + x_{i+1}) over Z_{|s|},
/// returning the subset of the first collision with 0 rather than the
/// lexicographically least one. Elements must be distinct; at most 64.
std::vector<Nat> zero_sum_subset(std::vector<Nat> s);

/// Checks #supp(r * 2^i * (2^k - 1)) == k. Requires r odd and
/// bit_length(r) <= k - 1; the result is true for every valid input, so a
/// false return would falsify the underlying lemma.
bool support_lemma_check(Nat r, uint32_t i, uint32_t k);

}  // namespace tmsets
