#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dmtree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

/// Runs the command line front end. `args` excludes the program name.
/// Returns 0 on success or equivalence, 1 for a negative answer (invalid
/// function, not equivalent, failed property), 2 for unusable input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmtree::cli
