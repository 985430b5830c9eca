#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dal {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int counterexample = 1;
inline constexpr int invalid_input = 2;
inline constexpr int obstruction = 3;
inline constexpr int budget_exceeded = 4;
} // namespace exit_code

/// Runs one command line (without the program name). Certificates go to `out`,
/// human-readable summaries and errors to `err`. `in` backs "-" arguments.
auto run_cli(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;

} // namespace dal
