#include "weyl/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weyl {

std::string to_string(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::pass: return "pass";
    case CheckVerdict::fail: return "fail";
    case CheckVerdict::inconclusive: return "inconclusive";
    case CheckVerdict::error: return "error";
  }
  return "error";
}

CheckVerdict verdict_from_string(const std::string& s) {
  if (s == "pass") return CheckVerdict::pass;
  if (s == "fail") return CheckVerdict::fail;
  if (s == "inconclusive") return CheckVerdict::inconclusive;
  if (s == "error") return CheckVerdict::error;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

bool Report::all_passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.verdict == CheckVerdict::pass; });
}

std::size_t Report::count(CheckVerdict v) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [v](const CheckRecord& r) { return r.verdict == v; }));
}

ordered_json to_json(const Report& report, bool include_timing) {
  ordered_json doc;
  doc["scenario"] = report.scenario;
  doc["description"] = report.description;
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json rec;
    rec["id"] = r.id;
    rec["kind"] = r.kind;
    rec["provenance"] = r.provenance;
    rec["anchor"] = r.anchor;
    rec["inputs"] = r.inputs;
    rec["verdict"] = to_string(r.verdict);
    rec["witness"] = r.witness;
    rec["details"] = r.details;
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  doc["summary"] = {{"checks", report.records.size()},
                    {"passed", report.count(CheckVerdict::pass)},
                    {"failed", report.count(CheckVerdict::fail)},
                    {"inconclusive", report.count(CheckVerdict::inconclusive)},
                    {"errors", report.count(CheckVerdict::error)},
                    {"status", report.all_passed() ? "pass" : "fail"}};
  if (include_timing) {
    ordered_json timing;
    double total = 0;
    ordered_json per = ordered_json::object();
    for (const auto& r : report.records) {
      per[r.id] = r.wall_ms;
      total += r.wall_ms;
    }
    timing["total_ms"] = total;
    timing["checks_ms"] = std::move(per);
    doc["timing"] = std::move(timing);
  }
  return doc;
}

Report report_from_json(const ordered_json& doc) {
  Report report;
  report.scenario = doc.at("scenario").get<std::string>();
  report.description = doc.value("description", "");
  for (const auto& rec : doc.at("records")) {
    CheckRecord r;
    r.id = rec.at("id").get<std::string>();
    r.kind = rec.at("kind").get<std::string>();
    r.provenance = rec.value("provenance", "");
    r.anchor = rec.value("anchor", "");
    r.inputs = rec.value("inputs", ordered_json::object());
    r.verdict = verdict_from_string(rec.at("verdict").get<std::string>());
    r.witness = rec.value("witness", "");
    r.details = rec.value("details", ordered_json::array());
    if (doc.contains("timing") && doc["timing"].contains("checks_ms") && doc["timing"]["checks_ms"].contains(r.id))
      r.wall_ms = doc["timing"]["checks_ms"][r.id].get<double>();
    report.records.push_back(std::move(r));
  }
  return report;
}

std::string to_markdown(const Report& report) {
  std::ostringstream out;
  out << "# Verification report: " << report.scenario << "\n\n";
  if (!report.description.empty()) out << report.description << "\n\n";
  out << "| id | kind | provenance | verdict | witness |\n|---|---|---|---|---|\n";
  for (const auto& r : report.records) {
    std::string w = r.witness;
    std::replace(w.begin(), w.end(), '|', '/');
    out << "| " << r.id << " | " << r.kind << " | " << r.provenance << " | " << to_string(r.verdict) << " | " << w
        << " |\n";
  }
  out << "\n**" << report.count(CheckVerdict::pass) << " / " << report.records.size() << " checks passed**";
  if (!report.all_passed()) out << " (" << report.records.size() - report.count(CheckVerdict::pass) << " not passing)";
  out << "\n";
  return out.str();
}

}  // namespace weyl
