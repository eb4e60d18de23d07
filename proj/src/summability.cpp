#include "tmsets/summability.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "tmsets/errors.hpp"
#include "tmsets/occurrences.hpp"

namespace tmsets {

namespace {

// Largest bound for which the witness search materializes a membership
// bitmap (32 MiB of bits).
constexpr uint64_t kMaxSearchBound = uint64_t{1} << 28;

std::vector<Nat> all_subset_sums(const std::vector<Nat>& xs) {
  std::vector<Nat> sums;
  sums.reserve((size_t{1} << xs.size()) - 1);
  for (Nat x : xs) {
    size_t old = sums.size();
    sums.push_back(x);
    for (size_t i = 0; i < old; ++i) sums.push_back(sums[i] + x);
  }
  return sums;
}

uint32_t ceil_log2(uint64_t v) {
  return v <= 1 ? 0 : static_cast<uint32_t>(std::bit_width(v - 1));
}

}  // namespace

bool has_ufs(const std::vector<Nat>& xs) {
  if (xs.empty()) throw std::invalid_argument("has_ufs: empty sequence");
  if (xs.size() > kMaxUfsTerms) {
    throw std::invalid_argument("has_ufs: more than 24 terms");
  }
  std::vector<Nat> sums = all_subset_sums(xs);
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

SumSequence::SumSequence(std::vector<Nat> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("SumSequence: empty");
  if (terms_.size() > kMaxUfsTerms) {
    throw std::invalid_argument("SumSequence: more than 24 terms");
  }
  if (terms_.front() == 0) {
    throw std::invalid_argument("SumSequence: terms must be positive");
  }
  for (size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i - 1] >= terms_[i]) {
      throw std::invalid_argument("SumSequence: terms must strictly increase");
    }
  }
  if (!has_ufs(terms_)) {
    throw std::invalid_argument(
        "SumSequence: subset sums collide (uniqueness of finite sums fails)");
  }
}

std::vector<Nat> finite_sums(const SumSequence& xs) {
  std::vector<Nat> sums = all_subset_sums(xs.terms());
  std::sort(sums.begin(), sums.end());
  if (std::adjacent_find(sums.begin(), sums.end()) != sums.end()) {
    throw invariant_violation("finite_sums: duplicate subset sum on a UFS input");
  }
  return sums;
}

std::optional<SumSequence> find_k_summable_witness(const MemberFn& member,
                                                   uint32_t k, uint64_t bound) {
  if (k == 0) throw std::invalid_argument("witness search: k must be >= 1");
  if (k > kMaxWitnessTerms) {
    throw std::invalid_argument("witness search: k must be <= 20");
  }
  if (bound == 0) throw std::invalid_argument("witness search: bound must be >= 1");
  if (bound > kMaxSearchBound) {
    throw std::invalid_argument("witness search: bound must be <= 2^28");
  }

  std::vector<uint64_t> members;
  std::vector<bool> in_set(bound + 1, false);
  for (uint64_t n = 1; n <= bound; ++n) {
    if (member(n)) {
      members.push_back(n);
      in_set[n] = true;
    }
  }

  std::vector<uint64_t> terms;
  std::vector<uint64_t> sums;  // current nonempty subset sums, sorted
  uint64_t total = 0;
  terms.reserve(k);

  auto dfs = [&](auto&& self, size_t start) -> bool {
    if (terms.size() == k) return true;
    uint64_t remaining = k - terms.size();
    for (size_t idx = start; idx < members.size(); ++idx) {
      uint64_t x = members[idx];
      // members are increasing, so once the cheapest possible completion
      // overshoots the bound no later candidate can work either
      if (static_cast<Nat>(total) + static_cast<Nat>(x) * remaining > bound) {
        break;
      }
      std::vector<uint64_t> fresh;
      fresh.reserve(sums.size() + 1);
      bool ok = in_set[x] && !std::binary_search(sums.begin(), sums.end(), x);
      if (ok) fresh.push_back(x);
      for (size_t i = 0; ok && i < sums.size(); ++i) {
        uint64_t s = sums[i] + x;
        if (s > bound || !in_set[s] ||
            std::binary_search(sums.begin(), sums.end(), s)) {
          ok = false;
          break;
        }
        fresh.push_back(s);
      }
      if (!ok) continue;
      std::vector<uint64_t> saved = sums;
      size_t mid = sums.size();
      sums.insert(sums.end(), fresh.begin(), fresh.end());
      std::inplace_merge(sums.begin(), sums.begin() + static_cast<long>(mid),
                         sums.end());
      terms.push_back(x);
      total += x;
      if (self(self, idx + 1)) return true;
      total -= x;
      terms.pop_back();
      sums = std::move(saved);
    }
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  return SumSequence({terms.begin(), terms.end()});
}

bool is_k_summable_upto(const MemberFn& member, uint32_t k, uint64_t bound) {
  return find_k_summable_witness(member, k, bound).has_value();
}

MemberFn occurrence_member(const Factor& u) {
  return [u](uint64_t n) { return occurrence_parity_check(n, u); };
}

SumSequence ip_witness_for_prefix(const Factor& u, uint32_t terms) {
  if (!is_prefix_of_t(u.word())) {
    throw std::invalid_argument("ip_witness: \"" + u.word() +
                                "\" is not a prefix of T");
  }
  if (terms == 0 || terms > kMaxWitnessTerms) {
    throw std::invalid_argument("ip_witness: terms must be in 1..20");
  }
  std::vector<Nat> xs;
  Nat total = 0;
  for (uint32_t i = 0; i < terms; ++i) {
    // least n with 2^n > total + |u| - 1
    uint32_t n = static_cast<uint32_t>(bit_length(total + u.size() - 1));
    Nat term = Nat{3} << n;
    xs.push_back(term);
    total += term;
  }
  // every finite sum must be an occurrence of u
  for (uint64_t mask = 1; mask < (uint64_t{1} << terms); ++mask) {
    Nat sum = 0;
    for (uint32_t i = 0; i < terms; ++i) {
      if (mask & (uint64_t{1} << i)) sum += xs[i];
    }
    if (!occurrence_parity_check(sum, u)) {
      throw invariant_violation("ip_witness: sum " + to_string(sum) +
                                " is not an occurrence of \"" + u.word() + "\"");
    }
  }
  return SumSequence(std::move(xs));
}

SumSequence fsbig_witness_for_tmbar_prefix(const Factor& u, uint32_t k,
                                           uint32_t num_terms) {
  if (!is_prefix_of_tbar(u.word())) {
    throw std::invalid_argument("fsbig_witness: \"" + u.word() +
                                "\" is not a prefix of Tbar");
  }
  if (k == 0 || k > 16) {
    throw std::invalid_argument("fsbig_witness: k must be in 1..16");
  }
  if (num_terms == 0 || num_terms > kMaxWitnessTerms) {
    throw std::invalid_argument("fsbig_witness: num_terms must be in 1..20");
  }
  uint32_t j = ceil_log2(2 * k - 1);
  uint32_t l = ceil_log2(u.size());
  Nat ones = ((Nat{1} << (2 * k - 1)) - 1) << l;  // 1^{2k-1} 0^l
  std::vector<Nat> xs;
  for (uint32_t n = 0; n < num_terms; ++n) {
    // 11 0^{2n+j} 1^{2k-1} 0^l
    xs.push_back((Nat{3} << (2 * n + j + (2 * k - 1) + l)) | ones);
  }
  return SumSequence(std::move(xs));
}

bool verify_sum_family(const Factor& u, const SumSequence& xs,
                       uint32_t max_terms) {
  const std::vector<Nat>& t = xs.terms();
  if (t.size() > kMaxWitnessTerms) {
    throw std::invalid_argument("verify_sum_family: more than 20 terms");
  }
  for (uint64_t mask = 1; mask < (uint64_t{1} << t.size()); ++mask) {
    if (static_cast<uint32_t>(std::popcount(mask)) > max_terms) continue;
    Nat sum = 0;
    for (size_t i = 0; i < t.size(); ++i) {
      if (mask & (uint64_t{1} << i)) sum += t[i];
    }
    if (!occurrence_parity_check(sum, u)) return false;
  }
  return true;
}

std::vector<Nat> zero_sum_subset(std::vector<Nat> s) {
  if (s.empty()) throw std::invalid_argument("zero_sum_subset: empty set");
  if (s.size() > 64) {
    throw std::invalid_argument("zero_sum_subset: more than 64 elements");
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw std::invalid_argument("zero_sum_subset: elements must be distinct");
  }
  const uint64_t k = s.size();
  // residue class -> subset of indices achieving it, first found wins
  std::vector<bool> reached(k, false);
  std::vector<uint64_t> mask_for(k, 0);
  reached[0] = true;  // C_0 = {0} via the empty subset
  for (uint64_t i = 0; i < k; ++i) {
    uint64_t xi = static_cast<uint64_t>(s[i] % k);
    uint64_t need = (k - xi) % k;
    if (reached[need]) {
      uint64_t witness = mask_for[need] | (uint64_t{1} << i);
      std::vector<Nat> out;
      for (uint64_t b = 0; b < k; ++b) {
        if (witness & (uint64_t{1} << b)) out.push_back(s[b]);
      }
      return out;
    }
    std::vector<bool> snapshot = reached;
    for (uint64_t r = 0; r < k; ++r) {
      if (!snapshot[r]) continue;
      uint64_t nr = (r + xi) % k;
      if (!reached[nr]) {
        reached[nr] = true;
        mask_for[nr] = mask_for[r] | (uint64_t{1} << i);
      }
    }
  }
  // |C_i| grows strictly whenever no collision happens, so C_k would need
  // k + 1 residues; unreachable
  throw invariant_violation("zero_sum_subset: recursion found no collision");
}

bool support_lemma_check(Nat r, uint32_t i, uint32_t k) {
  if (r == 0 || (r & 1) == 0) {
    throw std::invalid_argument("support_lemma_check: r must be odd");
  }
  if (k < 2 || static_cast<uint32_t>(bit_length(r)) > k - 1) {
    throw std::invalid_argument(
        "support_lemma_check: need bit_length(r) <= k - 1");
  }
  if (bit_length(r) + i + k > 127) {
    throw std::invalid_argument("support_lemma_check: value exceeds 128 bits");
  }
  Nat value = r * (Nat{1} << i) * ((Nat{1} << k) - 1);
  return static_cast<uint32_t>(popcount(value)) == k;
}

}  // namespace tmsets
