#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitBadData = 2;

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sg::cli
