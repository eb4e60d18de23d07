#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tmsets/summability.hpp"

namespace tmsets {

// The occurrence set of "1" below bound, split by the parity of the lowest
// set bit: a0 holds the members whose least binary digit position is even,
// a1 those where it is odd. Neither cell is 2^infinity-summable.
struct Tm1Partition {
  uint64_t bound = 0;
  std::vector<uint64_t> a0;
  std::vector<uint64_t> a1;
};

Tm1Partition tm1_partition(uint64_t bound);

struct PairCheckReport {
  uint64_t pairs_checked = 0;
  uint64_t violations = 0;
};

/// The mechanical step behind the partition above: for every pair x < y
/// below bound with min supp(x) = min supp(y) = r and matching bit r+1,
/// min supp(x + y) must equal r + 1. A violation throws invariant_violation.
PairCheckReport tm1_sum_parity_check(uint64_t bound);

/// A k-term UFS witness inside each cell of the tm1 partition (all subset
/// sums in the cell), found by the lexicographic witness search. Throws
/// not_found_error, echoing the bound, when a cell yields nothing.
std::pair<SumSequence, SumSequence> tm1_fsbig_probe(uint64_t bound, uint32_t k);

// Desk-scale model of the ternary counterexample to partition regularity of
// the infinite FS-big sets: D = integers with ternary digits in {0,1},
// positions are partitioned into cells E_i by the 2-adic valuation of p+1,
// D_i keeps the members of D supported inside E_i with at most i digits,
// A = union of the D_i, and A is split into A_0/A_1 by the parity of
// v_2(#supp_3(n)). No two same-support-size members of one cell may sum
// back into that cell.
struct TernaryReport {
  uint64_t bound = 0;
  uint32_t max_cell = 0;
  uint64_t d_size = 0;
  std::vector<uint64_t> cell_sizes;  // |D_i| for i = 1..max_cell
  uint64_t a_size = 0;
  uint64_t a0_size = 0;
  uint64_t a1_size = 0;
  uint64_t pairs_checked = 0;
  uint64_t violations = 0;
};

TernaryReport ternary_counterexample(uint64_t bound, uint32_t max_cell);

// Result of the weak-Schur style search: the least m <= max_m such that
// every r-coloring of {1..m} contains the finite-sums set of some k-term
// UFS sequence inside one color class, together with a certificate coloring
// of {1..certificate_domain} containing no such set.
struct WeakSchurResult {
  std::optional<uint32_t> m;
  std::vector<uint8_t> certificate;  // colors 1..r for elements 1..domain
  uint32_t certificate_domain = 0;
  uint64_t colorings_checked = 0;
};

/// Exhaustive over all r^m colorings, with only the color of 1 fixed by
/// symmetry. Caps: r <= 3, k <= 3, max_m <= 16.
WeakSchurResult weak_schur_search(uint32_t r, uint32_t k, uint32_t max_m);

/// Straightforward re-check that a coloring admits a monochromatic k-term
/// UFS finite-sums set, written independently of the search's candidate
/// precomputation so certificates can be validated against different code.
bool coloring_admits_mono_fs(const std::vector<uint8_t>& colors, uint32_t k);

// F_1, ..., F_k with max F_t < min F_{t+1}; blocks are sorted element lists.
struct BlockFamily {
  std::vector<std::vector<uint32_t>> blocks;
};

// An r-coloring of the nonempty subsets of {1..m}. Subsets are passed as
// bitmasks with element e on bit e.
class FinColoring {
 public:
  FinColoring(uint32_t m, uint32_t r, std::function<uint32_t(uint32_t)> color)
      : m_(m), r_(r), color_(std::move(color)) {}

  uint32_t m() const { return m_; }
  uint32_t r() const { return r_; }
  uint32_t color(uint32_t mask) const { return color_(mask); }

 private:
  uint32_t m_;
  uint32_t r_;
  std::function<uint32_t(uint32_t)> color_;
};

/// The least block family (ordered by the largest element of F_k, then by
/// the blocks compared as sorted integer tuples left to right) whose 2^k - 1
/// unions all receive the same color; nullopt when no family qualifies.
/// Caps: m <= 16, k <= 4.
std::optional<BlockFamily> block_family_search(const FinColoring& coloring,
                                               uint32_t k);

bool verify_block_family(const FinColoring& coloring, const BlockFamily& family,
                         uint32_t k);

struct FsDemoResult {
  uint32_t cell = 0;
  SumSequence xs;
  BlockFamily family;
};

/// The block-sum mechanism behind partition regularity of the finite FS-big
/// sets: color each nonempty H in Fin({1..|ys|}) by the cell of the sum of
/// the corresponding ys, find a monochromatic block family, and contract it
/// to x_n = sum over F_n. The returned xs inherits UFS from ys and has all
/// its finite sums in one cell.
std::optional<FsDemoResult> fs_partition_demo(
    const SumSequence& ys, uint32_t num_cells,
    const std::function<uint32_t(Nat)>& cell_of, uint32_t k);

}  // namespace tmsets
