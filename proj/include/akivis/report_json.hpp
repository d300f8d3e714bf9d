#pragma once

#include <string>
#include <vector>

#include "akivis/check_report.hpp"

namespace akivis {

// Machine-readable run report:
//
//   {
//     "format": "akivis-report/1",
//     "command": "check",
//     "algebra": "octonions",
//     "status": "pass" | "fail",
//     "reports": [
//       {"identity": "...", "status": "...", "checked": N, "failures": N,
//        "witnesses": [{"tuple": [...], "relation": "...", "lhs": "...", "rhs": "..."}]}
//     ]
//   }
//
// Values are canonical exact-rational text; keys keep this order.
std::string report_json(const std::string& command, const std::string& algebra,
                        const std::vector<CheckReport>& reports);

}  // namespace akivis
