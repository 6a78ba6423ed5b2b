#include "gmr/report.hpp"

#include <algorithm>
#include <sstream>

namespace gmr {

using nlohmann::json;

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Ok: return "ok";
    case Outcome::Violation: return "violation";
    case Outcome::InvalidInput: return "invalid_input";
    case Outcome::ResourceLimit: return "resource_limit";
  }
  return "?";
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Fail: return "fail";
    case VerdictStatus::NotApplicable: return "n/a";
  }
  return "?";
}

Section& Report::section(std::string name, std::vector<std::string> columns) {
  sections.push_back(Section{std::move(name), std::move(columns), {}});
  return sections.back();
}

namespace {

std::string cell_text(const json& v) {
  switch (v.type()) {
    case json::value_t::string: return v.get<std::string>();
    case json::value_t::boolean: return v.get<bool>() ? "yes" : "no";
    case json::value_t::null: return "-";
    case json::value_t::array: {
      std::string s = "{";
      for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "; " : "") + cell_text(v[k]);
      return s + "}";
    }
    case json::value_t::object: return v.dump();
    default: return v.dump();
  }
}

void table(std::string& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string l = " ";
    for (std::size_t c = 0; c < cells.size(); ++c) {
      l += " " + cells[c];
      if (c + 1 < cells.size()) l += std::string(width[c] - cells[c].size() + 1, ' ');
    }
    out += l + "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& r : rows) line(r);
}

}  // namespace

std::string render_text(const Report& r) {
  std::string out = "gmr report\n";
  auto field = [&](const char* k, const std::string& v) { out += std::string("  ") + k + std::string(9 - std::string(k).size(), ' ') + v + "\n"; };
  field("command", r.command);
  field("spec", r.spec_name);
  field("digest", r.digest.empty() ? "-" : r.digest);
  field("outcome", std::string(to_string(r.outcome)) + " (exit " + std::to_string(r.exit_code()) + ")");
  if (!r.error_code.empty()) field("error", r.error_code + ": " + r.error_message);
  if (r.timing_ms) field("timing", std::to_string(*r.timing_ms) + " ms");
  field("input", r.input.is_null() ? "-" : r.input.dump());

  if (!r.verdicts.empty()) {
    out += "\nverdicts\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : r.verdicts) rows.push_back({v.id, to_string(v.status), v.claim, v.detail});
    table(out, {"id", "status", "claim", "detail"}, rows);
    for (const auto& v : r.verdicts)
      if (!v.witness.empty()) out += "  witness " + v.id + ": " + v.witness + "\n";
  }
  for (const auto& s : r.sections) {
    out += "\n" + s.name + "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : s.rows) {
      rows.emplace_back();
      for (const auto& c : row) rows.back().push_back(cell_text(c));
    }
    table(out, s.columns, rows);
  }
  std::string trimmed;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + "\n";
  }
  return trimmed;
}

std::string render_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["spec"] = {{"name", r.spec_name}, {"digest", r.digest}, {"input", r.input}};
  json outcome = {{"exit_code", r.exit_code()}, {"status", to_string(r.outcome)}, {"error", nullptr}};
  if (!r.error_code.empty()) outcome["error"] = {{"code", r.error_code}, {"message", r.error_message}};
  j["outcome"] = outcome;
  j["verdicts"] = json::array();
  for (const auto& v : r.verdicts)
    j["verdicts"].push_back({{"id", v.id}, {"claim", v.claim}, {"status", to_string(v.status)}, {"detail", v.detail},
                             {"witness", v.witness}});
  j["sections"] = json::object();
  for (const auto& s : r.sections) j["sections"][s.name] = {{"columns", s.columns}, {"rows", s.rows}};
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j.dump(2) + "\n";
}

}  // namespace gmr
