#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spherepair::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2, kOracleRefused = 3 };

// Parses argv (argv[0] is the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spherepair::cli
