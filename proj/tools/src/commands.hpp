#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace impactzeta::cli {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Runs the command line; output goes to `out` unless --output names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

std::string tool_version();

}  // namespace impactzeta::cli
