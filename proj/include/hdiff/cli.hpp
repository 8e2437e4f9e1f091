#ifndef HDIFF_CLI_HPP
#define HDIFF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hdiff {

// Runs a subcommand; stdout-bound output goes to `out`, usage errors to
// `err`. Returns the process exit code: 0 all checks pass, 1 some check
// failed, 2 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdiff

#endif
