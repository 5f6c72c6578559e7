#ifndef SGON_TOOLS_CLI_HH
#define SGON_TOOLS_CLI_HH

#include <ostream>
#include <string>
#include <vector>

namespace sgon::cli {

/// Runs one command line (without the program name) and returns the exit status.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace sgon::cli

#endif
