#include "akivis/report_json.hpp"

#include <json.hpp>

namespace akivis {

std::string report_json(const std::string& command, const std::string& algebra,
                        const std::vector<CheckReport>& reports) {
  using json = nlohmann::ordered_json;
  bool all_pass = true;
  json list = json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.passed();
    json witnesses = json::array();
    for (const auto& w : r.witnesses) {
      json entry;
      entry["tuple"] = w.tuple;
      entry["relation"] = w.relation;
      entry["lhs"] = to_string(w.lhs);
      entry["rhs"] = to_string(w.rhs);
      witnesses.push_back(std::move(entry));
    }
    json item;
    item["identity"] = r.identity;
    item["status"] = r.passed() ? "pass" : "fail";
    item["checked"] = r.checked;
    item["failures"] = r.failures;
    item["witnesses"] = std::move(witnesses);
    list.push_back(std::move(item));
  }
  json doc;
  doc["format"] = "akivis-report/1";
  doc["command"] = command;
  doc["algebra"] = algebra;
  doc["status"] = all_pass ? "pass" : "fail";
  doc["reports"] = std::move(list);
  return doc.dump(2) + "\n";
}

}  // namespace akivis
