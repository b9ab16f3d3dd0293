#ifndef TENSORGRAPH_CLI_HPP
#define TENSORGRAPH_CLI_HPP

#include <string>
#include <vector>

namespace tensorgraph::cli {

inline constexpr const char* tool_name = "tgraph";
inline constexpr const char* tool_version = "1.0.0";

/// Exit codes: 0 success or property holds, 1 graph invalid or property
/// fails, 2 parse or usage error, 3 internal invariant violation.
struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Runs one command line; `args` excludes the program name.
CommandResult run(const std::vector<std::string>& args);

} // namespace tensorgraph::cli

#endif // TENSORGRAPH_CLI_HPP
