#ifndef DEFECTCTL_APP_HPP_
#define DEFECTCTL_APP_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace defectctl {

enum ExitCode : int {
  kExitOk = 0,
  kExitSelftestFailed = 1,
  kExitParse = 2,
  kExitUnsupported = 3,
};

// Full command-line entry point. The report goes to `out` only once it is
// complete; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace defectctl

#endif
