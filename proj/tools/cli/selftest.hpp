#pragma once

#include <string>
#include <vector>

namespace ncpc::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // set on failure
};

// Embedded micro-examples. `corrupt_leaves` damages the leaves table of the
// reverse-canonical code under test, which must make its checks fail.
std::vector<CheckResult> run_selftest(bool corrupt_leaves = false);

}  // namespace ncpc::cli
