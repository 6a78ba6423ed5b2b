#pragma once

#include <string>
#include <vector>

namespace gmr {

enum class VerdictStatus { Pass, Fail, NotApplicable };

const char* to_string(VerdictStatus s);

/// One checked claim. `witness` carries the counterexample on failure.
struct Verdict {
  std::string id;
  std::string claim;
  VerdictStatus status = VerdictStatus::Pass;
  std::string detail;
  std::string witness;
};

struct TheoremReport {
  std::vector<Verdict> verdicts;

  bool ok() const {
    for (const auto& v : verdicts)
      if (v.status == VerdictStatus::Fail) return false;
    return true;
  }
  void add(Verdict v) { verdicts.push_back(std::move(v)); }
};

}  // namespace gmr
