#ifndef OCA_CLI_HPP
#define OCA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace oca {

/// Runs one CLI invocation (args exclude the program name).
/// Exit codes: 0 ok, 1 usage, 2 domain error, 3 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace oca

#endif
