#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xbmat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one verb. `args` excludes the program name. Returns 0 on success or
/// PASS, 1 on FAIL, 2 on usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xbmat::cli
