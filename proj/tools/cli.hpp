#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lattika::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kIo = 3,
};

/// Runs one command line (args[0] is the program name) and returns the
/// process exit code. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Demo topics: lattice, cyclotomic, switching, gauss. Returns kOk when every
/// check holds and kVerifyFailed otherwise.
int run_demo(const std::string& topic, std::ostream& out);

}  // namespace lattika::cli
