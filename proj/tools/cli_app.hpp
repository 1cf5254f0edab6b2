#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace optocav::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kNumerical = 2,
  kIo = 3,
  kOracleFailed = 4,
};

/// Runs the command line (args excludes the program name). Tables written to
/// "-" go to out; messages go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splices key=value lines from --config PATH into args as --key value,
/// skipping keys already given on the command line.
std::vector<std::string> merge_config(const std::vector<std::string>& args);

}  // namespace optocav::cli
