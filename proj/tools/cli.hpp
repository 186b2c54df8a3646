#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fixmahon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). `in` feeds inputs given as "-".
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fixmahon::cli
