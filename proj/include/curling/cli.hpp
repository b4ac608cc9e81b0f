#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curling {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// The `curling` command line. args excludes the program name. Returns 0 on
/// success, 1 on a domain error (message on `err`), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace curling
