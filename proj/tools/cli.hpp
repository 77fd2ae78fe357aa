#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctxlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // domain failure
inline constexpr int kExitUsage = 2;

// `args` excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctxlab::cli
