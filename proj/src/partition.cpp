#include "tmsets/partition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "tmsets/errors.hpp"

namespace tmsets {

namespace {

bool in_tm1_cell(uint64_t n, int cell) {
  if (n == 0 || (std::popcount(n) & 1) == 0) return false;
  return (std::countr_zero(n) & 1) == cell;
}

// All finite-sums bitmasks of k-term UFS sequences whose subset sums all
// fit in {1..m}. A mask has bit v set for each sum v.
std::vector<uint32_t> mono_fs_candidates(uint32_t k, uint32_t m) {
  std::vector<uint32_t> out;
  std::vector<uint32_t> terms;
  std::vector<uint32_t> sums;
  auto rec = [&](auto&& self, uint32_t next) -> void {
    if (terms.size() == k) {
      uint32_t mask = 0;
      for (uint32_t s : sums) mask |= uint32_t{1} << s;
      out.push_back(mask);
      return;
    }
    for (uint32_t x = next; x <= m; ++x) {
      size_t old = sums.size();
      bool ok = true;
      for (size_t i = 0; i < old && ok; ++i) {
        uint32_t s = sums[i] + x;
        ok = s <= m && std::find(sums.begin(), sums.end(), s) == sums.end();
        if (ok) sums.push_back(s);
      }
      ok = ok && std::find(sums.begin(), sums.begin() + static_cast<long>(old),
                           x) == sums.begin() + static_cast<long>(old);
      if (ok) {
        sums.insert(sums.begin() + static_cast<long>(old), x);
        terms.push_back(x);
        self(self, x + 1);
        terms.pop_back();
      }
      sums.resize(old);
    }
  };
  rec(rec, 1);
  return out;
}

uint32_t block_max(uint32_t mask) {
  return 31 - static_cast<uint32_t>(std::countl_zero(mask));
}

std::vector<uint32_t> mask_elements(uint32_t mask) {
  std::vector<uint32_t> out;
  while (mask != 0) {
    out.push_back(static_cast<uint32_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

// Order: largest element of the last block first, then the blocks compared
// as sorted integer tuples left to right.
bool family_less(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  uint32_t ma = block_max(a.back());
  uint32_t mb = block_max(b.back());
  if (ma != mb) return ma < mb;
  for (size_t t = 0; t < a.size(); ++t) {
    std::vector<uint32_t> ea = mask_elements(a[t]);
    std::vector<uint32_t> eb = mask_elements(b[t]);
    if (ea != eb) {
      return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(),
                                          eb.end());
    }
  }
  return false;
}

}  // namespace

Tm1Partition tm1_partition(uint64_t bound) {
  if (bound < 2) throw std::invalid_argument("tm1_partition: bound must be >= 2");
  Tm1Partition p;
  p.bound = bound;
  for (uint64_t n = 1; n < bound; ++n) {
    if (in_tm1_cell(n, 0)) p.a0.push_back(n);
    if (in_tm1_cell(n, 1)) p.a1.push_back(n);
  }
  return p;
}

PairCheckReport tm1_sum_parity_check(uint64_t bound) {
  if (bound < 4) {
    throw std::invalid_argument("tm1_sum_parity_check: bound must be >= 4");
  }
  PairCheckReport report;
  for (uint64_t x = 1; x < bound; ++x) {
    uint32_t r = static_cast<uint32_t>(std::countr_zero(x));
    if (r + 1 >= 64) continue;
    uint64_t xbit = (x >> (r + 1)) & 1;
    for (uint64_t y = x + 1; y < bound; ++y) {
      if (static_cast<uint32_t>(std::countr_zero(y)) != r) continue;
      if (((y >> (r + 1)) & 1) != xbit) continue;
      ++report.pairs_checked;
      if (static_cast<uint32_t>(std::countr_zero(x + y)) != r + 1) {
        ++report.violations;
        throw invariant_violation(
            "tm1_sum_parity_check: min supp(" + std::to_string(x) + " + " +
            std::to_string(y) + ") != " + std::to_string(r + 1));
      }
    }
  }
  return report;
}

std::pair<SumSequence, SumSequence> tm1_fsbig_probe(uint64_t bound, uint32_t k) {
  if (k == 0 || k > 4) {
    throw std::invalid_argument("tm1_fsbig_probe: k must be in 1..4");
  }
  auto find_in_cell = [&](int cell) {
    auto witness = find_k_summable_witness(
        [cell](uint64_t n) { return in_tm1_cell(n, cell); }, k, bound);
    if (!witness) {
      throw not_found_error("tm1_fsbig_probe: no " + std::to_string(k) +
                            "-term witness in A" + std::to_string(cell) +
                            " below " + std::to_string(bound) +
                            "; try a larger bound");
    }
    return *witness;
  };
  return {find_in_cell(0), find_in_cell(1)};
}

TernaryReport ternary_counterexample(uint64_t bound, uint32_t max_cell) {
  constexpr uint64_t kMaxBound = 531441;  // 3^12
  if (bound < 2 || bound > kMaxBound) {
    throw std::invalid_argument(
        "ternary_counterexample: bound must be in 2..3^12");
  }
  if (max_cell == 0 || max_cell > 32) {
    throw std::invalid_argument("ternary_counterexample: max_cell in 1..32");
  }
  TernaryReport report;
  report.bound = bound;
  report.max_cell = max_cell;
  report.cell_sizes.assign(max_cell, 0);

  struct Member {
    uint64_t value;
    uint32_t supp_size;
  };
  // members of each A_i
  std::vector<Member> a_cells[2];
  std::vector<bool> in_a_cell[2];
  in_a_cell[0].assign(bound, false);
  in_a_cell[1].assign(bound, false);

  for (uint64_t n = 1; n < bound; ++n) {
    SupportSet supp;
    bool in_d = true;
    uint64_t v = n;
    for (uint32_t pos = 0; v != 0 && in_d; ++pos, v /= 3) {
      uint64_t digit = v % 3;
      if (digit == 2) in_d = false;
      if (digit == 1) supp.push_back(pos);
    }
    if (!in_d) continue;
    ++report.d_size;
    // position p lies in E_i with i - 1 = v_2(p + 1)
    uint32_t i = static_cast<uint32_t>(std::countr_zero(supp.front() + 1)) + 1;
    bool uniform = true;
    for (uint32_t p : supp) {
      uniform &= static_cast<uint32_t>(std::countr_zero(p + 1)) + 1 == i;
    }
    if (!uniform || supp.size() > i || i > max_cell) continue;
    ++report.cell_sizes[i - 1];
    ++report.a_size;
    uint32_t size = static_cast<uint32_t>(supp.size());
    // n lands in A_0 or A_1 by the parity of v_2(#supp_3(n))
    int b = std::countr_zero(size) & 1;
    a_cells[b].push_back({n, size});
    in_a_cell[b][n] = true;
  }
  report.a0_size = a_cells[0].size();
  report.a1_size = a_cells[1].size();

  for (int b = 0; b < 2; ++b) {
    const auto& cell = a_cells[b];
    for (size_t i = 0; i < cell.size(); ++i) {
      for (size_t j = i + 1; j < cell.size(); ++j) {
        if (cell[i].supp_size != cell[j].supp_size) continue;
        ++report.pairs_checked;
        uint64_t sum = cell[i].value + cell[j].value;
        if (sum < bound && in_a_cell[b][sum]) {
          ++report.violations;
          throw invariant_violation(
              "ternary_counterexample: " + std::to_string(cell[i].value) +
              " + " + std::to_string(cell[j].value) + " stays in A" +
              std::to_string(b));
        }
      }
    }
  }
  return report;
}

WeakSchurResult weak_schur_search(uint32_t r, uint32_t k, uint32_t max_m) {
  if (r == 0 || r > 3) throw std::invalid_argument("weak_schur: r must be 1..3");
  if (k == 0 || k > 3) throw std::invalid_argument("weak_schur: k must be 1..3");
  if (max_m == 0 || max_m > 16) {
    throw std::invalid_argument("weak_schur: max_m must be 1..16");
  }
  WeakSchurResult result;
  std::vector<uint8_t> last_bad;
  for (uint32_t m = 1; m <= max_m; ++m) {
    std::vector<uint32_t> candidates = mono_fs_candidates(k, m);
    std::vector<uint8_t> colors(m, 1);  // color of 1 fixed by symmetry
    bool all_good = true;
    std::vector<uint8_t> bad;
    while (true) {
      ++result.colorings_checked;
      uint32_t class_mask[3] = {0, 0, 0};
      for (uint32_t e = 1; e <= m; ++e) {
        class_mask[colors[e - 1] - 1] |= uint32_t{1} << e;
      }
      bool mono = false;
      for (uint32_t cand : candidates) {
        for (uint32_t c = 0; c < r && !mono; ++c) {
          mono = (cand & ~class_mask[c]) == 0;
        }
        if (mono) break;
      }
      if (!mono) {
        all_good = false;
        bad = colors;
        break;
      }
      size_t pos = 1;
      while (pos < m && colors[pos] == r) colors[pos++] = 1;
      if (pos >= m) break;
      ++colors[pos];
    }
    if (all_good) {
      result.m = m;
      result.certificate = last_bad;
      result.certificate_domain = m - 1;
      return result;
    }
    last_bad = std::move(bad);
  }
  result.certificate = last_bad;
  result.certificate_domain = max_m;
  return result;
}

bool coloring_admits_mono_fs(const std::vector<uint8_t>& colors, uint32_t k) {
  uint32_t m = static_cast<uint32_t>(colors.size());
  std::vector<uint32_t> terms(k);
  auto rec = [&](auto&& self, uint32_t depth, uint32_t next) -> bool {
    if (depth == k) {
      std::vector<uint32_t> sums;
      for (uint32_t mask = 1; mask < (uint32_t{1} << k); ++mask) {
        uint32_t s = 0;
        for (uint32_t i = 0; i < k; ++i) {
          if (mask & (uint32_t{1} << i)) s += terms[i];
        }
        if (s > m) return false;
        sums.push_back(s);
      }
      std::sort(sums.begin(), sums.end());
      if (std::adjacent_find(sums.begin(), sums.end()) != sums.end()) {
        return false;  // not UFS
      }
      uint8_t c = colors[sums.front() - 1];
      for (uint32_t s : sums) {
        if (colors[s - 1] != c) return false;
      }
      return true;
    }
    for (uint32_t x = next; x <= m; ++x) {
      terms[depth] = x;
      if (self(self, depth + 1, x + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 1);
}

std::optional<BlockFamily> block_family_search(const FinColoring& coloring,
                                               uint32_t k) {
  uint32_t m = coloring.m();
  if (m == 0 || m > 16) {
    throw std::invalid_argument("block_family_search: m must be 1..16");
  }
  if (k == 0 || k > 4) {
    throw std::invalid_argument("block_family_search: k must be 1..4");
  }
  // materialize colors once; masks carry element e on bit e
  std::vector<uint32_t> color(uint32_t{1} << (m + 1), 0);
  uint32_t full = ((uint32_t{1} << m) - 1) << 1;
  for (uint32_t mask = full; mask != 0; mask = (mask - 1) & full) {
    color[mask] = coloring.color(mask);
    if (color[mask] >= coloring.r()) {
      throw std::invalid_argument("block_family_search: color out of range");
    }
  }

  std::vector<uint32_t> blocks;
  std::optional<std::vector<uint32_t>> best;

  auto consider = [&]() {
    // all 2^k - 1 unions must share one color
    uint32_t want = color[blocks[0]];
    for (uint32_t mask = 1; mask < (uint32_t{1} << k); ++mask) {
      uint32_t u = 0;
      for (uint32_t t = 0; t < k; ++t) {
        if (mask & (uint32_t{1} << t)) u |= blocks[t];
      }
      if (color[u] != want) return;
    }
    if (!best || family_less(blocks, *best)) best = blocks;
  };

  auto rec = [&](auto&& self, uint32_t lo) -> void {
    if (blocks.size() == k) {
      consider();
      return;
    }
    if (lo > m) return;
    uint32_t range = (((uint32_t{1} << (m - lo + 1)) - 1) << lo);
    for (uint32_t sub = range; sub != 0; sub = (sub - 1) & range) {
      blocks.push_back(sub);
      self(self, block_max(sub) + 1);
      blocks.pop_back();
    }
  };
  rec(rec, 1);

  if (!best) return std::nullopt;
  BlockFamily family;
  for (uint32_t mask : *best) family.blocks.push_back(mask_elements(mask));
  return family;
}

bool verify_block_family(const FinColoring& coloring, const BlockFamily& family,
                         uint32_t k) {
  if (family.blocks.size() != k || k == 0) return false;
  std::vector<uint32_t> masks;
  for (const auto& block : family.blocks) {
    if (block.empty()) return false;
    uint32_t mask = 0;
    for (uint32_t e : block) {
      if (e == 0 || e > coloring.m()) return false;
      mask |= uint32_t{1} << e;
    }
    if (!masks.empty() && block_max(masks.back()) >= *std::min_element(
                              block.begin(), block.end())) {
      return false;
    }
    masks.push_back(mask);
  }
  uint32_t want = coloring.color(masks[0]);
  for (uint32_t mask = 1; mask < (uint32_t{1} << k); ++mask) {
    uint32_t u = 0;
    for (uint32_t t = 0; t < k; ++t) {
      if (mask & (uint32_t{1} << t)) u |= masks[t];
    }
    if (coloring.color(u) != want) return false;
  }
  return true;
}

std::optional<FsDemoResult> fs_partition_demo(
    const SumSequence& ys, uint32_t num_cells,
    const std::function<uint32_t(Nat)>& cell_of, uint32_t k) {
  uint32_t m = static_cast<uint32_t>(ys.size());
  if (m > 16) {
    throw std::invalid_argument("fs_partition_demo: at most 16 terms");
  }
  if (num_cells == 0) {
    throw std::invalid_argument("fs_partition_demo: need at least one cell");
  }
  auto subset_sum = [&](uint32_t mask) {
    Nat sum = 0;
    for (uint32_t t = 1; t <= m; ++t) {
      if (mask & (uint32_t{1} << t)) sum += ys.terms()[t - 1];
    }
    return sum;
  };
  FinColoring coloring(m, num_cells,
                       [&](uint32_t mask) { return cell_of(subset_sum(mask)); });
  auto family = block_family_search(coloring, k);
  if (!family) return std::nullopt;

  std::vector<Nat> xs;
  for (const auto& block : family->blocks) {
    Nat sum = 0;
    for (uint32_t t : block) sum += ys.terms()[t - 1];
    xs.push_back(sum);
  }
  FsDemoResult result{0, SumSequence(std::move(xs)), *family};
  result.cell = cell_of(result.xs.terms().front());
  for (Nat s : finite_sums(result.xs)) {
    if (cell_of(s) != result.cell) {
      throw invariant_violation(
          "fs_partition_demo: contracted sums left their cell");
    }
  }
  return result;
}

}  // namespace tmsets
