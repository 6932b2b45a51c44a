#ifndef SYSCODES_TOOLS_CLI_H
#define SYSCODES_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace syscodes {

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_USAGE = 2;
inline constexpr int EXIT_PRECONDITION = 3;
inline constexpr int EXIT_ASSERTION = 4;

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace syscodes

#endif
