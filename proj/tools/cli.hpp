#ifndef SUPERSYM_TOOLS_CLI_HPP
#define SUPERSYM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace supersym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace supersym::cli

#endif
