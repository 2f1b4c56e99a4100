// Reference verification run: checks every built-in presentation against
// the pinned class-verdict table, runs the cross-identity suite on each,
// and exercises the finite-space duality checks. The run is fully
// deterministic: identical budget and seed produce byte-identical output.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "lgroup/presentation.hpp"

namespace lgroup {

struct CheckRecord {
  std::string id;        // stable identifier, e.g. "ex_5_2_1/class/Y"
  std::string subject;   // presentation or space the check ran on
  std::string kind;      // "class", "cross", "duality", or "classes"
  std::string expected;
  std::string actual;
  bool ok = false;
  std::string detail;    // witness terms / condition / item detail
};

struct PaperReport {
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;

  bool all_ok() const {
    for (const auto& r : records) {
      if (!r.ok) return false;
    }
    return true;
  }
};

// Expected verdict for one built-in presentation and class, straight
// from the pinned table. Throws std::invalid_argument for unknown names.
VerdictStatus expected_class_status(const std::string& builtin_name, ClassName cls);

// Runs every check. The seed is recorded in the report; all checks are
// deterministic, so it does not influence any verdict.
PaperReport run_paper_verification(std::uint64_t budget = 2000, std::uint64_t seed = 0);

nlohmann::json paper_report_to_json(const PaperReport& r);
std::string paper_report_to_text(const PaperReport& r);

}  // namespace lgroup
