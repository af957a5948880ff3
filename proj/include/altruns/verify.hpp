#pragma once

#include <string>
#include <vector>

namespace altruns {

enum class Suite { kAll, kTriangle, kGenfun, kClosedForm, kBijection, kPolynomial };

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double millis = 0.0;
};

// Runs the selected invariant checks in a fixed order.
std::vector<CheckResult> run_suite(Suite suite);

}  // namespace altruns
