// tm: command-line front end. Every subcommand emits a machine-readable
// report (--json) or a short human summary; exit codes are part of the
// contract: 0 success, 1 clean negative, 2 usage error, 3 invariant
// violation.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "json.hpp"
#include "tmsets/errors.hpp"
#include "tmsets/version.hpp"

using nlohmann::json;

int main(int argc, char** argv) {
  CLI::App app{"Additive structure of Thue-Morse occurrence sets"};
  app.require_subcommand(1);
  app.fallthrough();  // let --json and friends appear after the subcommand
  app.set_version_flag("--version", tmsets::kVersion);

  bool json_out = false;
  bool csv_out = false;
  uint64_t seed = 0;
  app.add_flag("--json", json_out, "emit the JSON report on stdout");
  app.add_flag("--csv", csv_out, "emit CSV (occurrence lists only)");
  auto* seed_opt =
      app.add_option("--seed", seed, "reserved; accepted and echoed only");

  std::string command;
  json params;

  // prefix
  size_t length = 40;
  bool bar = false;
  auto* prefix = app.add_subcommand("prefix", "prefix of T (or of Tbar)");
  prefix->add_option("--length", length, "letters to emit")
      ->capture_default_str();
  prefix->add_flag("--bar", bar, "complemented fixed point");
  prefix->callback([&] {
    command = "prefix";
    params = {{"length", length}, {"bar", bar}};
  });

  // letter
  uint64_t index = 0;
  auto* letter = app.add_subcommand("letter", "single letter t_n");
  letter->add_option("-n,--index", index, "position")->required();
  letter->callback([&] {
    command = "letter";
    params = {{"n", index}};
  });

  // occurrences
  std::string factor;
  uint64_t bound = 1024;
  auto* occ = app.add_subcommand("occurrences", "positions of a factor");
  occ->add_option("--factor", factor, "factor as a 01-string")->required();
  occ->add_option("--bound", bound, "scan below this position")
      ->capture_default_str();
  occ->callback([&] {
    command = "occurrences";
    params = {{"factor", factor}, {"bound", bound}};
  });

  // classify
  auto* classify = app.add_subcommand("classify", "additive class of T|_u");
  classify->add_option("--factor", factor, "factor as a 01-string")->required();
  classify->callback([&] {
    command = "classify";
    params = {{"factor", factor}};
  });

  // ending-pattern
  uint64_t ep_bound = 65536;
  auto* ending =
      app.add_subcommand("ending-pattern", "binary endings of occurrences");
  ending->add_option("--factor", factor, "non-prefix factor")->required();
  ending->add_option("--bound", ep_bound, "scan below this position")
      ->capture_default_str();
  ending->callback([&] {
    command = "ending-pattern";
    params = {{"factor", factor}, {"bound", ep_bound}};
  });

  // witness summable|ip|fsbig
  auto* witness = app.add_subcommand("witness", "witness constructions");
  witness->require_subcommand(1);
  uint32_t k = 2;
  uint64_t w_bound = 65536;
  auto* summable =
      witness->add_subcommand("summable", "exhaustive k-summability search");
  summable->add_option("--factor", factor)->required();
  summable->add_option("-k,--terms", k, "terms in the sequence")
      ->capture_default_str();
  summable->add_option("--bound", w_bound, "cap on terms and sums")
      ->capture_default_str();
  summable->callback([&] {
    command = "witness summable";
    params = {{"factor", factor}, {"k", k}, {"bound", w_bound}};
  });

  uint32_t ip_terms = 10;
  auto* ip = witness->add_subcommand("ip", "greedy IP witness (prefixes of T)");
  ip->add_option("--factor", factor)->required();
  ip->add_option("--max-terms", ip_terms, "terms to construct")
      ->capture_default_str();
  ip->callback([&] {
    command = "witness ip";
    params = {{"factor", factor}, {"max_terms", ip_terms}};
  });

  uint32_t fs_k = 1;
  uint32_t fs_terms = 8;
  auto* fsbig =
      witness->add_subcommand("fsbig", "FS-big witness (prefixes of Tbar)");
  fsbig->add_option("--factor", factor)->required();
  fsbig->add_option("-k,--strength", fs_k, "sums of up to 2k-1 terms land")
      ->capture_default_str();
  fsbig->add_option("--max-terms", fs_terms, "terms to construct")
      ->capture_default_str();
  fsbig->callback([&] {
    command = "witness fsbig";
    params = {{"factor", factor}, {"k", fs_k}, {"max_terms", fs_terms}};
  });

  // lemma zero-sum|support
  auto* lemma = app.add_subcommand("lemma", "standalone lemmas");
  lemma->require_subcommand(1);
  std::vector<uint64_t> zs_set;
  auto* zero_sum = lemma->add_subcommand(
      "zero-sum", "subset summing to 0 modulo the set size");
  zero_sum->add_option("--set", zs_set, "comma-separated elements")
      ->required()
      ->delimiter(',');
  zero_sum->callback([&] {
    command = "lemma zero-sum";
    params = {{"set", zs_set}};
  });

  uint64_t sl_r = 1;
  uint32_t sl_i = 0, sl_k = 2;
  auto* support =
      lemma->add_subcommand("support", "digit count of r * 2^i * (2^k - 1)");
  support->add_option("-r", sl_r, "odd multiplier")->required();
  support->add_option("-i", sl_i, "power of two shift")->capture_default_str();
  support->add_option("-k", sl_k, "block length")->required();
  support->callback([&] {
    command = "lemma support";
    params = {{"r", sl_r}, {"i", sl_i}, {"k", sl_k}};
  });

  // partition tm1|ternary
  auto* partition = app.add_subcommand("partition", "partition experiments");
  partition->require_subcommand(1);
  uint64_t tm1_bound = 64;
  bool sum_check = false;
  uint32_t probe_k = 0;
  auto* tm1 = partition->add_subcommand(
      "tm1", "split T|_1 by the parity of the lowest binary digit");
  tm1->add_option("--bound", tm1_bound)->capture_default_str();
  tm1->add_flag("--sum-check", sum_check, "check the min-supp sum mechanics");
  tm1->add_option("--probe", probe_k, "find k-term witnesses in both cells");
  tm1->callback([&] {
    command = "partition tm1";
    params = {{"bound", tm1_bound},
              {"sum_check", sum_check},
              {"probe_k", probe_k}};
  });

  uint64_t ternary_bound = 59049;
  uint32_t max_cell = 6;
  auto* ternary = partition->add_subcommand(
      "ternary", "ternary-support counterexample cells");
  ternary->add_option("--bound", ternary_bound)->capture_default_str();
  ternary->add_option("--max-cell", max_cell)->capture_default_str();
  ternary->callback([&] {
    command = "partition ternary";
    params = {{"bound", ternary_bound}, {"max_cell", max_cell}};
  });

  // search weak-schur|block-family|fs-demo
  auto* search = app.add_subcommand("search", "finite Ramsey engines");
  search->require_subcommand(1);
  uint32_t ws_r = 2, ws_k = 2, ws_max_m = 12;
  auto* weak = search->add_subcommand(
      "weak-schur", "least m forcing a monochromatic finite-sums set");
  weak->add_option("-r,--colors", ws_r)->capture_default_str();
  weak->add_option("-k,--terms", ws_k)->capture_default_str();
  weak->add_option("--max-m", ws_max_m)->capture_default_str();
  weak->callback([&] {
    command = "search weak-schur";
    params = {{"r", ws_r}, {"k", ws_k}, {"max_m", ws_max_m}};
  });

  std::string coloring = "constant";
  uint32_t bf_m = 4, bf_k = 2;
  auto* block = search->add_subcommand(
      "block-family", "monochromatic unions of separated blocks");
  block->add_option("--coloring", coloring,
                    "constant | min-parity | size-mod:<r>")
      ->capture_default_str();
  block->add_option("-m", bf_m, "ground set {1..m}")->capture_default_str();
  block->add_option("-k", bf_k, "blocks")->capture_default_str();
  block->callback([&] {
    command = "search block-family";
    params = {{"coloring", coloring}, {"m", bf_m}, {"k", bf_k}};
  });

  std::vector<uint64_t> ys;
  uint32_t fd_mod = 2, fd_k = 2;
  auto* demo = search->add_subcommand(
      "fs-demo", "contract a block family into a monochromatic FS set");
  demo->add_option("--ys", ys, "UFS sequence, comma separated")
      ->required()
      ->delimiter(',');
  demo->add_option("--mod", fd_mod, "cells = sum modulo this")
      ->capture_default_str();
  demo->add_option("-k", fd_k, "terms to produce")->capture_default_str();
  demo->callback([&] {
    command = "search fs-demo";
    params = {{"ys", ys}, {"mod", fd_mod}, {"k", fd_k}};
  });

  // verify
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "re-validate an emitted report");
  verify->add_option("--report", report_path, "path to a --json report")
      ->required();
  verify->callback([&] {
    command = "verify";
    params = {{"report", report_path}};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (seed_opt->count() > 0) params["seed"] = seed;

  try {
    auto start = std::chrono::steady_clock::now();
    tmcli::ExecOutcome outcome = tmcli::execute_command(command, params);
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (csv_out) {
      if (!outcome.csv) {
        std::cerr << "error: --csv is only available for occurrence lists\n";
        return 2;
      }
      std::cout << *outcome.csv;
    } else if (json_out) {
      std::cout << tmcli::make_report(command, params, outcome).dump(2) << "\n";
    } else {
      std::cout << outcome.human << "\n";
    }
    std::fprintf(stderr, "# %s: %.3fs, checked %llu, violations %llu\n",
                 command.c_str(), elapsed,
                 static_cast<unsigned long long>(outcome.checked),
                 static_cast<unsigned long long>(outcome.violations));
    return outcome.exit_code;
  } catch (const tmsets::invariant_violation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const tmsets::not_found_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
