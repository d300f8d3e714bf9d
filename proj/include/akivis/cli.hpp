#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace akivis::cli {

// Exit codes: 0 pass, 1 identity or verification failure, 2 usage or parse
// error.
inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Paper-style grid: rows are the left argument, columns the right one.
std::string format_table(const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels,
                         const std::vector<std::vector<std::string>>& cells,
                         const std::string& corner = "");

}  // namespace akivis::cli
