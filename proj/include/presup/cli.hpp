#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace presup::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_semantic = 1;
inline constexpr int exit_usage = 2;

// Runs the command line `presup ARGS...` (without the program name) against
// the given streams and returns the exit status.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace presup::cli
