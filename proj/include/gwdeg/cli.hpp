// Command-line driver. Kept as a library function so tests can run commands
// in process and capture their streams.
#ifndef GWDEG_CLI_HPP
#define GWDEG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gwdeg {

// args excludes the program name. Returns the process exit code:
//   0 success (and verdict Equal for verify)
//   1 verify verdict NotEqual
//   2 malformed input (command line or problem file, with position)
//   3 mathematical precondition violated
//   4 verdict undecided
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwdeg

#endif
