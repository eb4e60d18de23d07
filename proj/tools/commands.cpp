#include "commands.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "tmsets/errors.hpp"
#include "tmsets/occurrences.hpp"
#include "tmsets/partition.hpp"
#include "tmsets/summability.hpp"
#include "tmsets/version.hpp"
#include "tmsets/word.hpp"

namespace tmcli {

using nlohmann::json;
using namespace tmsets;

namespace {

constexpr const char* kBoundNote =
    "note: absence below a bound is not a proof";

uint64_t to_u64(Nat n) {
  if (hi64(n) != 0) throw std::runtime_error("value exceeds 64 bits");
  return lo64(n);
}

json nat_array(const std::vector<Nat>& xs) {
  json out = json::array();
  for (Nat x : xs) out.push_back(to_u64(x));
  return out;
}

std::string join(const std::vector<Nat>& xs) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) {
    os << (i ? " " : "") << to_string(xs[i]);
  }
  return os.str();
}

Factor factor_param(const json& params) {
  std::string word = params.at("factor");
  if (word.empty() || !is_bit_string(word)) {
    throw std::invalid_argument("factor must be a nonempty 01-string");
  }
  return Factor(word);  // throws if it does not occur in T
}

FinColoring parse_coloring(const std::string& name, uint32_t m) {
  if (name == "constant") {
    return FinColoring(m, 1, [](uint32_t) { return 0u; });
  }
  if (name == "min-parity") {
    return FinColoring(m, 2, [](uint32_t mask) {
      return static_cast<uint32_t>(std::countr_zero(mask)) % 2;
    });
  }
  if (name.rfind("size-mod:", 0) == 0) {
    uint32_t r = static_cast<uint32_t>(std::stoul(name.substr(9)));
    if (r == 0) throw std::invalid_argument("size-mod needs r >= 1");
    return FinColoring(m, r, [r](uint32_t mask) {
      return static_cast<uint32_t>(std::popcount(mask)) % r;
    });
  }
  throw std::invalid_argument(
      "unknown coloring \"" + name +
      "\"; known rules: constant, min-parity, size-mod:<r>");
}

json blocks_json(const BlockFamily& family) {
  json out = json::array();
  for (const auto& block : family.blocks) out.push_back(block);
  return out;
}

// ---- handlers ------------------------------------------------------------

ExecOutcome run_prefix(const json& params) {
  size_t length = params.at("length");
  bool bar = params.at("bar");
  BinaryWord w = bar ? tmbar_prefix(length) : tm_prefix(length);
  ExecOutcome out;
  for (size_t n = 0; n < w.size(); ++n) {
    int expected = bar ? 1 - tm_letter(n) : tm_letter(n);
    if (w[n] - '0' != expected) {
      throw invariant_violation("prefix letter " + std::to_string(n) +
                                " disagrees with the digit-parity automaton");
    }
  }
  out.checked = w.size();
  out.result = {{"word", w}, {"length", w.size()}};
  out.human = w;
  return out;
}

ExecOutcome run_letter(const json& params) {
  uint64_t n = params.at("n");
  int letter = tm_letter(n);
  ExecOutcome out;
  if (n < (uint64_t{1} << 22)) {
    if (tm_prefix(n + 1).back() - '0' != letter) {
      throw invariant_violation("letter disagrees with the doubling route");
    }
    out.checked = 1;
  }
  out.result = {{"letter", letter}};
  out.human = "t_" + std::to_string(n) + " = " + std::to_string(letter);
  return out;
}

ExecOutcome run_occurrences(const json& params) {
  Factor u = factor_param(params);
  uint64_t bound = params.at("bound");
  std::vector<uint64_t> pos = occurrences(u, bound);
  // re-verify each position through the other route when a prefix of that
  // size is reasonable to materialize
  if (bound + u.size() <= (uint64_t{1} << 22)) {
    std::string w = tm_prefix(bound + u.size());
    for (uint64_t p : pos) {
      if (w.compare(p, u.size(), u.word()) != 0) {
        throw invariant_violation("occurrence at " + std::to_string(p) +
                                  " fails the letter comparison");
      }
    }
  } else {
    for (uint64_t p : pos) {
      if (!occurrence_parity_check(p, u)) {
        throw invariant_violation("occurrence at " + std::to_string(p) +
                                  " fails the parity criterion");
      }
    }
  }
  ExecOutcome out;
  out.bounded = true;
  out.checked = pos.size();
  out.result = {{"positions", pos}, {"count", pos.size()}};
  std::ostringstream human;
  human << "T|_" << u.word() << " below " << bound << ": " << pos.size()
        << " occurrences";
  if (!pos.empty() && pos.size() <= 32) {
    human << " (";
    for (size_t i = 0; i < pos.size(); ++i) human << (i ? " " : "") << pos[i];
    human << ")";
  }
  human << "\n" << kBoundNote;
  out.human = human.str();
  std::ostringstream csv;
  csv << "position\n";
  for (uint64_t p : pos) csv << p << "\n";
  out.csv = csv.str();
  return out;
}

ExecOutcome run_classify(const json& params) {
  Factor u = factor_param(params);
  FactorClass c = classify_factor(u);
  std::optional<uint32_t> power = tau_power_aba_prefix(u);
  // the labels must stay consistent with the direct tests they summarize
  bool consistent = true;
  switch (c) {
    case FactorClass::kPrefixOfT_IP:
      consistent = is_prefix_of_t(u.word());
      break;
    case FactorClass::kPrefixOfTbar_InfFSBig:
      consistent = is_prefix_of_tbar(u.word());
      break;
    case FactorClass::kTwoNotThreeSummable:
      consistent = power.has_value();
      break;
    case FactorClass::kNotTwoSummable:
      consistent = !power.has_value();
      break;
  }
  if (!consistent) throw invariant_violation("classification inconsistent");
  ExecOutcome out;
  out.checked = 1;
  out.result = {{"label", to_string(c)},
                {"tau_power", power ? json(*power) : json(nullptr)}};
  out.human = std::string("T|_") + u.word() + ": " + to_string(c);
  return out;
}

ExecOutcome run_ending_pattern(const json& params) {
  Factor u = factor_param(params);
  uint64_t bound = params.at("bound");
  EndingPattern p = ending_pattern(u, bound);
  ExecOutcome out;
  out.bounded = true;
  out.checked = p.occurrences_checked;
  out.result = {{"case", p.kind == EndingCase::kSingle ? "single" : "double"},
                {"k", p.k},
                {"low_confidence", p.low_confidence},
                {"occurrences", p.occurrences_checked}};
  std::ostringstream human;
  if (p.kind == EndingCase::kSingle) {
    human << "every occurrence ends in 1 0^" << p.k;
    if (p.low_confidence) {
      human << " (all endings 11 0^" << p.k
            << " so far; a larger bound may reveal a double pattern)";
    }
  } else {
    human << "occurrences end in 11 0^" << p.k << " or 1 0^" << p.k + 1
          << ", both observed";
  }
  human << "\n" << kBoundNote;
  out.human = human.str();
  return out;
}

ExecOutcome run_witness_summable(const json& params) {
  Factor u = factor_param(params);
  uint32_t k = params.at("k");
  uint64_t bound = params.at("bound");
  MemberFn member = occurrence_member(u);
  auto witness = find_k_summable_witness(member, k, bound);
  ExecOutcome out;
  out.bounded = true;
  if (!witness) {
    out.exit_code = 1;
    out.result = {{"found", false}};
    out.human = "no " + std::to_string(k) + "-term witness for T|_" + u.word() +
                " below " + std::to_string(bound) + "\n" + kBoundNote;
    return out;
  }
  std::vector<Nat> sums = finite_sums(*witness);
  for (Nat s : sums) {
    if (to_u64(s) > bound || !member(to_u64(s))) {
      throw invariant_violation("witness sum " + to_string(s) +
                                " escapes the member set");
    }
  }
  out.checked = sums.size();
  out.result = {{"found", true},
                {"terms", nat_array(witness->terms())},
                {"sums", nat_array(sums)}};
  out.human = "witness (" + join(witness->terms()) + "), sums {" + join(sums) +
              "} inside T|_" + u.word();
  return out;
}

ExecOutcome run_witness_ip(const json& params) {
  Factor u = factor_param(params);
  uint32_t terms = params.at("max_terms");
  SumSequence xs = ip_witness_for_prefix(u, terms);  // self-verifying
  std::vector<Nat> sums = finite_sums(xs);
  for (Nat s : sums) {
    if (!occurrence_parity_check(s, u)) {
      throw invariant_violation("ip witness sum escapes T|_" + u.word());
    }
  }
  ExecOutcome out;
  out.checked = sums.size();
  out.result = {{"terms", nat_array(xs.terms())}};
  out.human = "IP witness (" + join(xs.terms()) + "), all " +
              std::to_string(sums.size()) + " finite sums inside T|_" + u.word();
  return out;
}

ExecOutcome run_witness_fsbig(const json& params) {
  Factor u = factor_param(params);
  uint32_t k = params.at("k");
  uint32_t terms = params.at("max_terms");
  SumSequence xs = fsbig_witness_for_tmbar_prefix(u, k, terms);
  if (!verify_sum_family(u, xs, 2 * k - 1)) {
    throw invariant_violation("a sum of <= 2k-1 terms escapes T|_" + u.word());
  }
  uint64_t checked = 0;
  for (uint64_t mask = 1; mask < (uint64_t{1} << terms); ++mask) {
    if (static_cast<uint32_t>(std::popcount(mask)) <= 2 * k - 1) ++checked;
  }
  ExecOutcome out;
  out.checked = checked;
  out.result = {{"terms", nat_array(xs.terms())}, {"k", k}};
  out.human = "FS-big witness (" + join(xs.terms()) + "); every sum of up to " +
              std::to_string(2 * k - 1) + " distinct terms lies in T|_" +
              u.word();
  return out;
}

ExecOutcome run_zero_sum(const json& params) {
  std::vector<Nat> s;
  for (uint64_t x : params.at("set").get<std::vector<uint64_t>>()) {
    s.push_back(x);
  }
  std::vector<Nat> subset = zero_sum_subset(s);
  Nat total = 0;
  for (Nat x : subset) total += x;
  if (total % s.size() != 0) {
    throw invariant_violation("zero-sum subset does not sum to 0 mod |S|");
  }
  ExecOutcome out;
  out.checked = 1;
  out.result = {{"subset", nat_array(subset)},
                {"modulus", s.size()},
                {"sum", to_u64(total)}};
  out.human = "subset {" + join(subset) + "} sums to " + to_string(total) +
              " = 0 mod " + std::to_string(s.size());
  return out;
}

ExecOutcome run_support_lemma(const json& params) {
  Nat r = static_cast<uint64_t>(params.at("r"));
  uint32_t i = params.at("i");
  uint32_t k = params.at("k");
  bool holds = support_lemma_check(r, i, k);
  Nat value = r * (Nat{1} << i) * ((Nat{1} << k) - 1);
  if (!holds) {
    throw invariant_violation("#supp(" + to_string(value) +
                              ") != " + std::to_string(k));
  }
  ExecOutcome out;
  out.checked = 1;
  out.result = {{"holds", true},
                {"value", to_u64(value)},
                {"support_size", k}};
  out.human = "#supp(" + to_string(value) + ") = " + std::to_string(k);
  return out;
}

ExecOutcome run_partition_tm1(const json& params) {
  uint64_t bound = params.at("bound");
  bool sum_check = params.at("sum_check");
  uint32_t probe_k = params.at("probe_k");
  Tm1Partition p = tm1_partition(bound);
  ExecOutcome out;
  out.bounded = true;
  out.checked = bound - 1;
  auto head = [](const std::vector<uint64_t>& v) {
    return std::vector<uint64_t>(v.begin(),
                                 v.begin() + std::min<size_t>(v.size(), 64));
  };
  out.result = {{"a0_size", p.a0.size()},
                {"a1_size", p.a1.size()},
                {"a0_head", head(p.a0)},
                {"a1_head", head(p.a1)}};
  std::ostringstream human;
  human << "T|_1 below " << bound << ": |A0| = " << p.a0.size()
        << ", |A1| = " << p.a1.size();
  if (sum_check) {
    PairCheckReport r = tm1_sum_parity_check(bound);
    out.checked += r.pairs_checked;
    out.violations += r.violations;
    out.result["pairs_checked"] = r.pairs_checked;
    human << "\nsum parity: " << r.pairs_checked
          << " qualifying pairs, 0 violations";
  }
  if (probe_k > 0) {
    auto [w0, w1] = tm1_fsbig_probe(bound, probe_k);
    out.result["probe"] = {{"a0_terms", nat_array(w0.terms())},
                           {"a1_terms", nat_array(w1.terms())}};
    human << "\n" << probe_k << "-term witnesses: A0 (" << join(w0.terms())
          << "), A1 (" << join(w1.terms()) << ")";
  }
  human << "\n" << kBoundNote;
  out.human = human.str();
  return out;
}

ExecOutcome run_partition_ternary(const json& params) {
  uint64_t bound = params.at("bound");
  uint32_t max_cell = params.at("max_cell");
  TernaryReport r = ternary_counterexample(bound, max_cell);
  ExecOutcome out;
  out.bounded = true;
  out.checked = r.pairs_checked;
  out.violations = r.violations;
  out.result = {{"d_size", r.d_size},       {"cell_sizes", r.cell_sizes},
                {"a_size", r.a_size},       {"a0_size", r.a0_size},
                {"a1_size", r.a1_size},     {"pairs_checked", r.pairs_checked}};
  std::ostringstream human;
  human << "|D| = " << r.d_size << ", |A| = " << r.a_size << " (A0 "
        << r.a0_size << ", A1 " << r.a1_size << "); " << r.pairs_checked
        << " same-cell pairs checked, 0 re-entered their cell\n"
        << kBoundNote;
  out.human = human.str();
  return out;
}

ExecOutcome run_weak_schur(const json& params) {
  uint32_t r = params.at("r");
  uint32_t k = params.at("k");
  uint32_t max_m = params.at("max_m");
  WeakSchurResult res = weak_schur_search(r, k, max_m);
  if (!res.certificate.empty() && coloring_admits_mono_fs(res.certificate, k)) {
    throw invariant_violation("certificate coloring admits a mono FS");
  }
  ExecOutcome out;
  out.bounded = true;
  out.checked = res.colorings_checked;
  json cert = json::array();
  for (uint8_t c : res.certificate) cert.push_back(c);
  std::ostringstream human;
  if (res.m) {
    out.result = {{"found", true},
                  {"m", *res.m},
                  {"certificate", cert},
                  {"certificate_domain", res.certificate_domain}};
    human << "every " << r << "-coloring of {1.." << *res.m
          << "} has a monochromatic " << k << "-term finite-sums set; "
          << "certificate coloring of {1.." << res.certificate_domain
          << "} has none";
  } else {
    out.exit_code = 1;
    out.result = {{"found", false},
                  {"certificate", cert},
                  {"certificate_domain", res.certificate_domain}};
    human << "no threshold up to m = " << max_m
          << "; certificate coloring of {1.." << res.certificate_domain
          << "} has no monochromatic " << k << "-term finite-sums set";
  }
  human << "\n" << kBoundNote;
  out.human = human.str();
  return out;
}

ExecOutcome run_block_family(const json& params) {
  uint32_t m = params.at("m");
  uint32_t k = params.at("k");
  std::string rule = params.at("coloring");
  FinColoring coloring = parse_coloring(rule, m);
  auto family = block_family_search(coloring, k);
  ExecOutcome out;
  if (!family) {
    out.exit_code = 1;
    out.result = {{"found", false}};
    out.human = "no monochromatic block family for coloring \"" + rule +
                "\" with m = " + std::to_string(m) + ", k = " + std::to_string(k);
    return out;
  }
  if (!verify_block_family(coloring, *family, k)) {
    throw invariant_violation("block family fails re-verification");
  }
  uint32_t first_mask = 0;
  for (uint32_t e : family->blocks.front()) first_mask |= uint32_t{1} << e;
  out.checked = (uint64_t{1} << k) - 1;
  out.result = {{"found", true},
                {"blocks", blocks_json(*family)},
                {"color", coloring.color(first_mask)}};
  std::ostringstream human;
  human << "blocks";
  for (const auto& block : family->blocks) {
    human << " {";
    for (size_t i = 0; i < block.size(); ++i) human << (i ? "," : "") << block[i];
    human << "}";
  }
  human << "; all " << ((1u << k) - 1) << " unions share color "
        << coloring.color(first_mask);
  out.human = human.str();
  return out;
}

ExecOutcome run_fs_demo(const json& params) {
  std::vector<Nat> ys;
  for (uint64_t y : params.at("ys").get<std::vector<uint64_t>>()) {
    ys.push_back(y);
  }
  uint32_t mod = params.at("mod");
  uint32_t k = params.at("k");
  if (mod == 0) throw std::invalid_argument("fs-demo: mod must be >= 1");
  auto cell_of = [mod](Nat s) { return static_cast<uint32_t>(s % mod); };
  auto demo = fs_partition_demo(SumSequence(std::move(ys)), mod, cell_of, k);
  ExecOutcome out;
  if (!demo) {
    out.exit_code = 1;
    out.result = {{"found", false}};
    out.human = "no monochromatic block family over these terms";
    return out;
  }
  std::vector<Nat> sums = finite_sums(demo->xs);
  for (Nat s : sums) {
    if (cell_of(s) != demo->cell) {
      throw invariant_violation("contracted sums left their cell");
    }
  }
  out.checked = sums.size();
  out.result = {{"found", true},
                {"cell", demo->cell},
                {"terms", nat_array(demo->xs.terms())},
                {"blocks", blocks_json(demo->family)}};
  out.human = "contracted terms (" + join(demo->xs.terms()) +
              "); all finite sums fall in cell " + std::to_string(demo->cell) +
              " (mod " + std::to_string(mod) + ")";
  return out;
}

ExecOutcome run_verify(const json& params) {
  std::string path = params.at("report");
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("verify: cannot open \"" + path + "\"");
  json report = json::parse(in);
  for (const char* key :
       {"command", "params", "result", "checked", "violations", "bounded",
        "version"}) {
    if (!report.contains(key)) {
      throw std::invalid_argument("verify: report lacks \"" + std::string(key) +
                                  "\"");
    }
  }
  std::string command = report.at("command");
  if (command == "verify") {
    throw std::invalid_argument("verify: refusing to verify a verify report");
  }
  ExecOutcome fresh = execute_command(command, report.at("params"));
  bool ok = fresh.result == report.at("result") &&
            fresh.checked == report.at("checked") &&
            fresh.violations == report.at("violations") &&
            fresh.bounded == report.at("bounded");
  ExecOutcome out;
  out.checked = 1;
  out.result = {{"verified", ok}, {"command", command}};
  if (ok) {
    out.human = "report for \"" + command + "\" re-validates";
  } else {
    out.exit_code = 3;
    out.violations = 1;
    out.human = "report for \"" + command + "\" does NOT match a fresh run";
  }
  return out;
}

}  // namespace

ExecOutcome execute_command(const std::string& command, const json& params) {
  if (command == "prefix") return run_prefix(params);
  if (command == "letter") return run_letter(params);
  if (command == "occurrences") return run_occurrences(params);
  if (command == "classify") return run_classify(params);
  if (command == "ending-pattern") return run_ending_pattern(params);
  if (command == "witness summable") return run_witness_summable(params);
  if (command == "witness ip") return run_witness_ip(params);
  if (command == "witness fsbig") return run_witness_fsbig(params);
  if (command == "lemma zero-sum") return run_zero_sum(params);
  if (command == "lemma support") return run_support_lemma(params);
  if (command == "partition tm1") return run_partition_tm1(params);
  if (command == "partition ternary") return run_partition_ternary(params);
  if (command == "search weak-schur") return run_weak_schur(params);
  if (command == "search block-family") return run_block_family(params);
  if (command == "search fs-demo") return run_fs_demo(params);
  if (command == "verify") return run_verify(params);
  throw std::invalid_argument("unknown command \"" + command + "\"");
}

json make_report(const std::string& command, const json& params,
                 const ExecOutcome& outcome) {
  return json{{"command", command},     {"params", params},
              {"result", outcome.result}, {"checked", outcome.checked},
              {"violations", outcome.violations}, {"bounded", outcome.bounded},
              {"version", tmsets::kVersion}};
}

}  // namespace tmcli
