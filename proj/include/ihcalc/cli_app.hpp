#ifndef IHCALC_CLI_APP_HPP
#define IHCALC_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ihcalc {

// Full command-line front end; returns the process exit code.
// Records go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ihcalc

#endif
