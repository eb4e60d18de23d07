#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tmsets/errors.hpp"
#include "tmsets/occurrences.hpp"
#include "tmsets/partition.hpp"
#include "tmsets/summability.hpp"
#include "tmsets/version.hpp"
#include "tmsets/word.hpp"

namespace py = pybind11;
using namespace tmsets;

namespace {

// The python surface trades in 64-bit values; everything this library
// constructs at its default caps fits comfortably.
uint64_t narrow(Nat n) {
  if (hi64(n) != 0) throw std::overflow_error("value exceeds 64 bits");
  return lo64(n);
}

std::vector<uint64_t> narrow_all(const std::vector<Nat>& xs) {
  std::vector<uint64_t> out;
  out.reserve(xs.size());
  for (Nat x : xs) out.push_back(narrow(x));
  return out;
}

std::vector<Nat> widen(const std::vector<uint64_t>& xs) {
  return {xs.begin(), xs.end()};
}

py::dict pattern_dict(const EndingPattern& p) {
  py::dict d;
  d["case"] = p.kind == EndingCase::kSingle ? "single" : "double";
  d["k"] = p.k;
  d["low_confidence"] = p.low_confidence;
  d["occurrences"] = p.occurrences_checked;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Additive structure of Thue-Morse occurrence sets (C++ core)";
  m.attr("__version__") = kVersion;

  py::register_exception<invariant_violation>(m, "InvariantViolation",
                                              PyExc_RuntimeError);
  py::register_exception<not_found_error>(m, "NotFoundError",
                                          PyExc_LookupError);

  // numerals
  m.def("binary_support",
        [](uint64_t n) { return binary_support(n); },
        py::arg("n"), "Positions of 1-bits, ascending.");
  m.def("parity_of_support",
        [](uint64_t n) { return parity_of_support(n); }, py::arg("n"));
  m.def("ternary_support",
        [](uint64_t n) { return ternary_support(n); }, py::arg("n"));
  m.def("binary_digits",
        [](uint64_t n) { return binary_digits(n); }, py::arg("n"));
  m.def("ends_with",
        [](uint64_t n, const std::string& suffix) {
          return ends_with(n, suffix);
        },
        py::arg("n"), py::arg("suffix"));

  // word engine
  m.def("tm_letter", [](uint64_t n) { return tm_letter(n); }, py::arg("n"));
  m.def("tm_prefix", &tm_prefix, py::arg("length"),
        "Prefix of T built by the doubling recurrence.");
  m.def("tmbar_prefix", &tmbar_prefix, py::arg("length"));
  m.def("apply_morphism", &apply_morphism, py::arg("word"),
        py::arg("iterations"));
  m.def("is_factor", &is_factor, py::arg("word"));
  m.def("is_prefix_of_t", &is_prefix_of_t, py::arg("word"));
  m.def("is_prefix_of_tbar", &is_prefix_of_tbar, py::arg("word"));

  // occurrences
  m.def("occurrences",
        [](const std::string& u, uint64_t bound) {
          return occurrences(Factor(u), bound);
        },
        py::arg("factor"), py::arg("bound"));
  m.def("occurrence_parity_check",
        [](uint64_t n, const std::string& u) {
          return occurrence_parity_check(n, Factor(u));
        },
        py::arg("n"), py::arg("factor"));
  m.def("ending_pattern",
        [](const std::string& u, uint64_t bound) {
          return pattern_dict(ending_pattern(Factor(u), bound));
        },
        py::arg("factor"), py::arg("bound") = 65536);
  m.def("tau_power_aba_prefix",
        [](const std::string& u) { return tau_power_aba_prefix(Factor(u)); },
        py::arg("factor"));
  m.def("classify_factor",
        [](const std::string& u) {
          return std::string(to_string(classify_factor(Factor(u))));
        },
        py::arg("factor"),
        "PrefixOfT_IP, PrefixOfTbar_InfFSBig, TwoNotThreeSummable, or "
        "NotTwoSummable.");

  // summability
  m.def("has_ufs",
        [](const std::vector<uint64_t>& xs) { return has_ufs(widen(xs)); },
        py::arg("terms"));
  m.def("finite_sums",
        [](const std::vector<uint64_t>& xs) {
          return narrow_all(finite_sums(SumSequence(widen(xs))));
        },
        py::arg("terms"));
  m.def("find_summable_witness",
        [](const std::string& u, uint32_t k,
           uint64_t bound) -> std::optional<std::vector<uint64_t>> {
          auto w =
              find_k_summable_witness(occurrence_member(Factor(u)), k, bound);
          if (!w) return std::nullopt;
          return narrow_all(w->terms());
        },
        py::arg("factor"), py::arg("k"), py::arg("bound") = 65536,
        "Lexicographically least witness inside an occurrence set, or None.");
  m.def("ip_witness",
        [](const std::string& u, uint32_t terms) {
          return narrow_all(ip_witness_for_prefix(Factor(u), terms).terms());
        },
        py::arg("factor"), py::arg("terms") = 10);
  m.def("fsbig_witness",
        [](const std::string& u, uint32_t k, uint32_t terms) {
          return narrow_all(
              fsbig_witness_for_tmbar_prefix(Factor(u), k, terms).terms());
        },
        py::arg("factor"), py::arg("k") = 1, py::arg("terms") = 8);
  m.def("verify_sum_family",
        [](const std::string& u, const std::vector<uint64_t>& xs,
           uint32_t max_terms) {
          return verify_sum_family(Factor(u), SumSequence(widen(xs)),
                                   max_terms);
        },
        py::arg("factor"), py::arg("terms"), py::arg("max_terms"));
  m.def("zero_sum_subset",
        [](const std::vector<uint64_t>& s) {
          return narrow_all(zero_sum_subset(widen(s)));
        },
        py::arg("s"),
        "Nonempty subset summing to 0 modulo the set size.");
  m.def("support_lemma_check",
        [](uint64_t r, uint32_t i, uint32_t k) {
          return support_lemma_check(r, i, k);
        },
        py::arg("r"), py::arg("i"), py::arg("k"));

  // partition lab
  m.def("tm1_partition",
        [](uint64_t bound) {
          Tm1Partition p = tm1_partition(bound);
          return py::make_tuple(p.a0, p.a1);
        },
        py::arg("bound"));
  m.def("tm1_sum_parity_check",
        [](uint64_t bound) {
          PairCheckReport r = tm1_sum_parity_check(bound);
          py::dict d;
          d["pairs_checked"] = r.pairs_checked;
          d["violations"] = r.violations;
          return d;
        },
        py::arg("bound"));
  m.def("tm1_fsbig_probe",
        [](uint64_t bound, uint32_t k) {
          auto [w0, w1] = tm1_fsbig_probe(bound, k);
          return py::make_tuple(narrow_all(w0.terms()), narrow_all(w1.terms()));
        },
        py::arg("bound"), py::arg("k"));
  m.def("ternary_counterexample",
        [](uint64_t bound, uint32_t max_cell) {
          TernaryReport r = ternary_counterexample(bound, max_cell);
          py::dict d;
          d["d_size"] = r.d_size;
          d["cell_sizes"] = r.cell_sizes;
          d["a_size"] = r.a_size;
          d["a0_size"] = r.a0_size;
          d["a1_size"] = r.a1_size;
          d["pairs_checked"] = r.pairs_checked;
          d["violations"] = r.violations;
          return d;
        },
        py::arg("bound") = 59049, py::arg("max_cell") = 6);
  m.def("weak_schur_search",
        [](uint32_t r, uint32_t k, uint32_t max_m) {
          WeakSchurResult res = weak_schur_search(r, k, max_m);
          py::dict d;
          d["m"] = res.m ? py::cast(*res.m) : py::none();
          d["certificate"] = res.certificate;
          d["certificate_domain"] = res.certificate_domain;
          d["colorings_checked"] = res.colorings_checked;
          return d;
        },
        py::arg("r"), py::arg("k"), py::arg("max_m") = 12);
  m.def("coloring_admits_mono_fs", &coloring_admits_mono_fs, py::arg("colors"),
        py::arg("k"));
  m.def("block_family_search",
        [](uint32_t m, uint32_t k,
           const std::function<uint32_t(std::vector<uint32_t>)>& color,
           uint32_t num_colors)
            -> std::optional<std::vector<std::vector<uint32_t>>> {
          // materialize the python coloring once, then search in C++
          std::vector<uint32_t> table(uint32_t{1} << (m + 1), 0);
          uint32_t full = ((uint32_t{1} << m) - 1) << 1;
          for (uint32_t mask = full; mask != 0; mask = (mask - 1) & full) {
            std::vector<uint32_t> elements;
            for (uint32_t e = 1; e <= m; ++e) {
              if (mask & (uint32_t{1} << e)) elements.push_back(e);
            }
            table[mask] = color(elements);
          }
          FinColoring coloring(
              m, num_colors,
              [&table](uint32_t mask) { return table[mask]; });
          auto family = block_family_search(coloring, k);
          if (!family) return std::nullopt;
          return family->blocks;
        },
        py::arg("m"), py::arg("k"), py::arg("color"), py::arg("num_colors"),
        "color receives a sorted element list and returns a cell index.");
  m.def("fs_partition_demo",
        [](const std::vector<uint64_t>& ys, uint32_t num_cells,
           const std::function<uint32_t(uint64_t)>& cell_of,
           uint32_t k) -> py::object {
          auto demo = fs_partition_demo(
              SumSequence(widen(ys)), num_cells,
              [&cell_of](Nat s) { return cell_of(narrow(s)); }, k);
          if (!demo) return py::none();
          py::dict d;
          d["cell"] = demo->cell;
          d["terms"] = narrow_all(demo->xs.terms());
          d["blocks"] = demo->family.blocks;
          return d;
        },
        py::arg("ys"), py::arg("num_cells"), py::arg("cell_of"), py::arg("k"));
}
