#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace proxgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the proxgraph command line; args[0] is the program name.
/// Reports go to files or `out`; diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace proxgraph::cli
