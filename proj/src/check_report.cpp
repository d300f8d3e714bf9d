#include "akivis/check_report.hpp"

#include <sstream>

#include "akivis/errors.hpp"

namespace akivis {

std::string to_string(const CheckValue& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

void CheckReport::record(std::vector<std::string> tuple, std::string relation, CheckValue lhs,
                         CheckValue rhs) {
  if (witness_cap == 0) throw InvalidInput("witness cap must be positive");
  ++failures;
  if (witnesses.size() < witness_cap)
    witnesses.push_back({std::move(tuple), std::move(relation), std::move(lhs), std::move(rhs)});
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << identity << ": " << (passed() ? "pass" : "fail") << " (" << checked << " checked, "
     << failures << " failed)\n";
  for (const auto& w : witnesses) {
    os << "  (";
    for (std::size_t i = 0; i < w.tuple.size(); ++i) os << (i ? ", " : "") << w.tuple[i];
    os << ")";
    if (!w.relation.empty()) os << " " << w.relation;
    os << ": " << to_string(w.lhs) << " != " << to_string(w.rhs) << "\n";
  }
  if (failures > witnesses.size())
    os << "  ... " << (failures - witnesses.size()) << " more\n";
  return os.str();
}

}  // namespace akivis
