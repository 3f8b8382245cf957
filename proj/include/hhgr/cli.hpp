#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hhgr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitUnsupported = 3;

/// Runs one command line (without the program name). Reports go to `out`;
/// in text mode diagnostics go to `err`, in JSON mode they are emitted on
/// `out` as an error object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hhgr::cli
