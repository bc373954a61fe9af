#ifndef NEGORD_CLI_HPP
#define NEGORD_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace negord {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int disagreement = 1;  ///< methods disagree, or an expectation is not met
inline constexpr int usage = 2;
inline constexpr int io = 3;
}  // namespace exit_code

/// Runs the tool with argv[1..] in `args`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace negord

#endif  // NEGORD_CLI_HPP
