#ifndef QGROWTH_CLI_HPP
#define QGROWTH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qgrowth::cli {

/// Runs one command. args excludes the program name. Returns 0 on success or
/// a verified claim, 1 on a violated claim, 2 on usage or precision errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qgrowth::cli

#endif
