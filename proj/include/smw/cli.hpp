#pragma once
// Command-line front end. `run` is the whole program: it parses one
// invocation, streams the rendered result, and returns the process exit
// code. Keeping it a library function lets tests drive the binary
// in-process with captured streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace smw::cli {

/// Executes one invocation. `args` holds the arguments after the program
/// name, in natural order. Exit codes:
///   0  success (for `verify`: every check passed)
///   1  a verification check failed; its witness is in the rendered report
///   2  usage error (unknown command, missing or malformed flags)
///   3  no sign convention in the finite search set validates
/// Output is byte-deterministic for a fixed argument list unless
/// `--timings` is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smw::cli
