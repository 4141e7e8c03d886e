#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace weyl {

using ordered_json = nlohmann::ordered_json;

enum class CheckVerdict { pass, fail, inconclusive, error };

std::string to_string(CheckVerdict v);
CheckVerdict verdict_from_string(const std::string& s);

struct CheckRecord {
  std::string id;
  std::string kind;
  std::string provenance;  // stated | derived | control
  std::string anchor;
  ordered_json inputs;
  CheckVerdict verdict = CheckVerdict::error;
  std::string witness;
  ordered_json details = ordered_json::array();
  double wall_ms = 0;
};

struct Report {
  std::string scenario;
  std::string description;
  std::vector<CheckRecord> records;

  bool all_passed() const;
  std::size_t count(CheckVerdict v) const;
};

/// Timing lives only in the trailing "timing" block so that everything else
/// is byte-stable between runs.
ordered_json to_json(const Report& report, bool include_timing = true);
Report report_from_json(const ordered_json& doc);

std::string to_markdown(const Report& report);

}  // namespace weyl
