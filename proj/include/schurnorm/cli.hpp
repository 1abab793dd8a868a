#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schurnorm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNoConvergence = 3;

/// Runs one command.  JSON goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurnorm::cli
