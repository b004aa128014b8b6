#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gf2q::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (program name excluded). Exit codes: 0 success,
/// 1 domain error, 2 usage error. Diagnostics are a single line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gf2q::cli
