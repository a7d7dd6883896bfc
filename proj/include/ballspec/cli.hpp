#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ballspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitError = 2;

/// Runs the `ballspec` command line. `args` excludes the program name.
/// Results go to `out` (or the --output file), diagnostics to `err`.
/// Returns 0 on success or a true verdict, 1 on a false verdict, 2 on error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ballspec::cli
