#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dagsched {

/// Process exit codes of the command line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_infeasible = 2;
inline constexpr int exit_timeout = 3;

/// Runs one command (args exclude the program name): solve, bench, scale, train,
/// validate, gen or gantt.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dagsched
