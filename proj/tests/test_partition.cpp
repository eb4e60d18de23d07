#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <random>

#include "oracles.hpp"
#include "tmsets/errors.hpp"
#include "tmsets/partition.hpp"

using namespace tmsets;

namespace {

std::vector<Nat> nats(std::initializer_list<uint64_t> xs) {
  return {xs.begin(), xs.end()};
}

FinColoring named_coloring(const char* rule, uint32_t m, uint32_t r) {
  if (std::string(rule) == "constant") {
    return FinColoring(m, r, [](uint32_t) { return 0u; });
  }
  // parity of the least element
  return FinColoring(m, 2, [](uint32_t mask) {
    return static_cast<uint32_t>(std::countr_zero(mask)) % 2;
  });
}

}  // namespace

TEST_CASE("tm1 partition") {
  Tm1Partition p = tm1_partition(64);
  CHECK(std::find(p.a0.begin(), p.a0.end(), 25) != p.a0.end());
  CHECK(std::find(p.a1.begin(), p.a1.end(), 2) != p.a1.end());
  CHECK_THROWS_AS(tm1_partition(1), std::invalid_argument);

  // cells are disjoint, cover T|_1, and follow the min-supp parity rule
  Tm1Partition big = tm1_partition(uint64_t{1} << 16);
  size_t i0 = 0, i1 = 0;
  for (uint64_t n = 1; n < big.bound; ++n) {
    bool in0 = i0 < big.a0.size() && big.a0[i0] == n;
    bool in1 = i1 < big.a1.size() && big.a1[i1] == n;
    CHECK_FALSE((in0 && in1));
    bool member = tm_letter(n) == 1;
    CHECK((in0 || in1) == member);
    if (member) {
      int min_supp = std::countr_zero(n);
      CHECK(in0 == (min_supp % 2 == 0));
    }
    if (in0) ++i0;
    if (in1) ++i1;
  }
}

TEST_CASE("tm1 sum parity mechanics") {
  PairCheckReport r = tm1_sum_parity_check(uint64_t{1} << 12);
  CHECK(r.violations == 0);
  CHECK(r.pairs_checked > 0);

  // the documented sample pairs qualify
  CHECK(std::countr_zero(1ull + 5) == 1);
  CHECK(std::countr_zero(3ull + 7) == 1);
}

TEST_CASE("tm1 fsbig probe") {
  auto [w0, w1] = tm1_fsbig_probe(uint64_t{1} << 14, 2);
  for (int cell = 0; cell < 2; ++cell) {
    const SumSequence& w = cell == 0 ? w0 : w1;
    for (Nat s : finite_sums(w)) {
      uint64_t v = static_cast<uint64_t>(s);
      CHECK(tm_letter(v) == 1);
      CHECK(std::countr_zero(v) % 2 == cell);
    }
  }

  auto [s0, s1] = tm1_fsbig_probe(64, 1);
  CHECK(s0.terms() == nats({1}));
  CHECK(s1.terms() == nats({2}));

  CHECK_THROWS_AS(tm1_fsbig_probe(4, 3), not_found_error);
}

TEST_CASE("ternary counterexample") {
  TernaryReport r = ternary_counterexample(6561, 4);  // 3^8
  CHECK(r.violations == 0);
  CHECK(r.d_size == 255);  // nonempty subsets of {3^0..3^7}

  // D really is FS(<3^n>): compare against direct subset sums
  std::vector<bool> in_d(6561, false);
  for (uint32_t mask = 1; mask < 256; ++mask) {
    uint64_t sum = 0;
    for (uint32_t i = 0; i < 8; ++i) {
      uint64_t p = 1;
      for (uint32_t j = 0; j < i; ++j) p *= 3;
      if (mask & (uint32_t{1} << i)) sum += p;
    }
    if (sum < 6561) in_d[sum] = true;
  }
  uint64_t count = 0;
  for (uint64_t n = 1; n < 6561; ++n) {
    bool digits_01 = true;
    for (uint64_t v = n; v != 0; v /= 3) digits_01 &= (v % 3) != 2;
    CHECK(digits_01 == in_d[n]);
    count += digits_01;
  }
  CHECK(count == r.d_size);

  // 3 + 9 stays inside D with disjoint ternary supports
  CHECK(ternary_support(3) == SupportSet{1});
  CHECK(ternary_support(9) == SupportSet{2});
  CHECK(ternary_support(12) == SupportSet{1, 2});

  CHECK_THROWS_AS(ternary_counterexample(1 << 20, 4), std::invalid_argument);
}

TEST_CASE("weak schur search") {
  WeakSchurResult r1 = weak_schur_search(1, 2, 10);
  CHECK(r1.m == 3);
  CHECK(r1.certificate_domain == 2);
  CHECK_FALSE(coloring_admits_mono_fs(r1.certificate, 2));

  WeakSchurResult r2 = weak_schur_search(2, 1, 10);
  CHECK(r2.m == 1);

  WeakSchurResult r3 = weak_schur_search(2, 2, 12);
  REQUIRE(r3.m.has_value());
  CHECK(*r3.m == oracles::weak_schur_brute(2, 2, 12).value());
  CHECK(r3.certificate.size() == *r3.m - 1);
  CHECK_FALSE(coloring_admits_mono_fs(r3.certificate, 2));
  CHECK_FALSE(oracles::mono_fs_brute(r3.certificate, 2));

  // small cross-check of the engine against the unpruned oracle
  for (uint32_t r = 1; r <= 2; ++r) {
    for (uint32_t k = 1; k <= 2; ++k) {
      CHECK(weak_schur_search(r, k, 10).m == oracles::weak_schur_brute(r, k, 10));
    }
  }

  CHECK_THROWS_AS(weak_schur_search(4, 2, 10), std::invalid_argument);
}

TEST_CASE("block family search") {
  auto constant = named_coloring("constant", 2, 1);
  auto f1 = block_family_search(constant, 2);
  REQUIRE(f1.has_value());
  CHECK(f1->blocks == std::vector<std::vector<uint32_t>>{{1}, {2}});
  CHECK(verify_block_family(constant, *f1, 2));

  auto minpar3 = named_coloring("min-parity", 3, 2);
  auto f2 = block_family_search(minpar3, 2);
  REQUIRE(f2.has_value());
  CHECK(f2->blocks == std::vector<std::vector<uint32_t>>{{1}, {3}});
  CHECK(verify_block_family(minpar3, *f2, 2));

  auto minpar2 = named_coloring("min-parity", 2, 2);
  CHECK_FALSE(block_family_search(minpar2, 2).has_value());

  auto constant43 = named_coloring("constant", 4, 1);
  auto f3 = block_family_search(constant43, 3);
  REQUIRE(f3.has_value());
  CHECK(f3->blocks == std::vector<std::vector<uint32_t>>{{1}, {2}, {3}});

  // verify_block_family rejects broken families
  BlockFamily bad{{{1, 3}, {2}}};
  CHECK_FALSE(verify_block_family(constant43, bad, 2));

  // random colorings: any returned family re-verifies
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    uint32_t m = 3 + rng() % 4;
    uint32_t r = 2 + rng() % 2;
    std::vector<uint32_t> table(uint32_t{1} << (m + 1));
    for (auto& c : table) c = static_cast<uint32_t>(rng() % r);
    FinColoring coloring(m, r, [&table](uint32_t mask) { return table[mask]; });
    for (uint32_t k = 2; k <= 3; ++k) {
      auto found = block_family_search(coloring, k);
      if (found) CHECK(verify_block_family(coloring, *found, k));
    }
  }
}

TEST_CASE("fs partition demo") {
  // powers of two, colored by parity of the subset sum
  std::vector<Nat> pows;
  for (uint32_t i = 0; i < 16; ++i) pows.push_back(Nat{1} << i);
  auto parity = [](Nat s) { return static_cast<uint32_t>(s % 2); };
  auto found = fs_partition_demo(SumSequence(pows), 2, parity, 2);
  REQUIRE(found.has_value());
  CHECK(has_ufs(found->xs.terms()));
  for (Nat s : finite_sums(found->xs)) CHECK(parity(s) == found->cell);

  // frozen small case: 1,2,4,8 colored by sum mod 3
  auto mod3 = [](Nat s) { return static_cast<uint32_t>(s % 3); };
  auto demo = fs_partition_demo(SumSequence(nats({1, 2, 4, 8})), 3, mod3, 2);
  REQUIRE(demo.has_value());
  CHECK(demo->family.blocks == std::vector<std::vector<uint32_t>>{{1, 2}, {3, 4}});
  CHECK(demo->xs.terms() == nats({3, 12}));
  CHECK(demo->cell == 0);

  // a single cell contracts to the identity blocks
  auto one_cell = fs_partition_demo(SumSequence(nats({1, 2, 4, 8})), 1,
                                    [](Nat) { return 0u; }, 2);
  REQUIRE(one_cell.has_value());
  CHECK(one_cell->family.blocks == std::vector<std::vector<uint32_t>>{{1}, {2}});
  CHECK(one_cell->xs.terms() == nats({1, 2}));
}
