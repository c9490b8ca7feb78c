#ifndef BIBNET_CLI_HPP
#define BIBNET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bibnet {

/// Command-line driver. Returns 0 on success, 1 on usage errors, 2 on data
/// errors. Usage errors never touch the filesystem.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bibnet

#endif
