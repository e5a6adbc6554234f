#ifndef MVOP_REPORT_HPP
#define MVOP_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace mvop {

/// Outcome of one verified identity.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// A discrepancy with a printed formula that does not invalidate the
/// computation (erratum, unverifiable constant, ...).
struct Finding {
  std::string topic;
  std::string detail;
};

inline bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

}  // namespace mvop

#endif  // MVOP_REPORT_HPP
