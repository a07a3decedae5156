#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace finfree {

/// Runs the finfree command line. Exit codes: 0 success, 1 verification
/// failure (the first failing identity is named on err), 2 usage or input
/// errors. Streams are injectable so tests can run subcommands in-process.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// main()-shaped wrapper writing to stdout/stderr.
int cli_run(int argc, const char* const* argv);

}  // namespace finfree
