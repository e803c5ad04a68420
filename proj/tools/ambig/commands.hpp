#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ambig::cli {

// Exit codes: 0 every check passed, 1 an axiom or property failed, 2 usage,
// parse or schema error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name. Reports go to `out` (or the --out file),
// diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ambig::cli
