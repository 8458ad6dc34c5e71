#ifndef IHCALC_VERIFY_HPP
#define IHCALC_VERIFY_HPP

#include <string>
#include <vector>

namespace ihcalc::verify {

enum class Status { Pass, Warn, Fail };

struct Check {
  std::string id;
  std::string description;
  Status status = Status::Pass;
  std::string detail;  // populated for warnings and failures
};

struct Options {
  long long max_n = 12;
  bool strict = false;  // documented discrepancies become failures
};

// Runs the whole cross-check catalog; the result is sorted by check id.
std::vector<Check> run_all(const Options& options);

// 0 when nothing failed (warnings allowed unless strict), 1 otherwise.
int exit_code(const std::vector<Check>& checks);

}  // namespace ihcalc::verify

#endif
