#ifndef DISTCRIT_TOOLS_CLI_HPP
#define DISTCRIT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace distcrit::cli {

// Full CLI entry point, separated from main() so tests can drive it.
// Exit codes: 0 success, 1 verification-suite failure, 2 usage error,
// 3 graph6 decode error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace distcrit::cli

#endif
