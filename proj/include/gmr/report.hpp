#pragma once

// Command reports. Every command fills the same structure: verdicts plus
// named tables whose cells are JSON values. Text output lays the tables
// out in fixed-width columns; JSON output is the same tree with sorted keys.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmr/verdict.hpp"

namespace gmr {

struct Section {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
};

/// Exit codes double as outcome classes.
enum class Outcome { Ok = 0, Violation = 1, InvalidInput = 2, ResourceLimit = 3 };
const char* to_string(Outcome o);

struct Report {
  std::string command;  // e.g. "radical --method all"
  std::string spec_name;
  std::string digest;
  nlohmann::json input;  // canonical spec echo; null if the spec did not parse
  std::vector<Verdict> verdicts;
  std::vector<Section> sections;
  Outcome outcome = Outcome::Ok;
  std::string error_code;
  std::string error_message;
  std::optional<std::uint64_t> timing_ms;

  Section& section(std::string name, std::vector<std::string> columns);
  int exit_code() const { return static_cast<int>(outcome); }
};

std::string render_text(const Report& r);
std::string render_json(const Report& r);

}  // namespace gmr
