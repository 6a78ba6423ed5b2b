#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gmr/report.hpp"

namespace gmr {

struct CommandOptions {
  std::string command;          // check | radical | ideals | quotient | components | verify
  std::string method = "all";   // radical: m | primes-gm | primes-ring | nilpotent | gm-max | all
  std::string flavor = "gm";    // ideals: gm | ring
  std::string ideal;            // quotient: named ideal
  std::string suite = "all";    // verify: iso | radical | all
  std::optional<std::uint64_t> max_order, max_lattice, max_radical;  // override the spec's caps
  bool timing = false;
};

/// "radical --method all" style echo of the options that matter for the command.
std::string describe(const CommandOptions& opts);

/// Runs one command on a spec text. Library errors become the report's
/// outcome; anything else (a bug) propagates.
Report run_command(std::string_view spec_text, const std::string& spec_name, const CommandOptions& opts);

}  // namespace gmr
