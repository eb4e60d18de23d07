#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace tmcli {

struct ExecOutcome {
  nlohmann::json result;
  uint64_t checked = 0;
  uint64_t violations = 0;
  bool bounded = false;
  int exit_code = 0;
  std::string human;
  std::optional<std::string> csv;
};

// Runs one subcommand from its fully-populated parameter object. Pure:
// identical inputs produce identical outcomes.
ExecOutcome execute_command(const std::string& command,
                            const nlohmann::json& params);

// The stable report schema emitted on stdout with --json.
nlohmann::json make_report(const std::string& command,
                           const nlohmann::json& params,
                           const ExecOutcome& outcome);

}  // namespace tmcli
