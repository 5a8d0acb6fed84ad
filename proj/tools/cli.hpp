#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace multipath::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInvariant = 2;

/// Runs one command line (without the program name); reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multipath::cli
