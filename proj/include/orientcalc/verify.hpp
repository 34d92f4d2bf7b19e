#pragma once

// Replays the library's identities for one formal group law.

#include <string>
#include <vector>

#include "orientcalc/fgl.hpp"

namespace orientcalc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Every identity up to size max_n. Sizes of the heavier checks are capped
/// (Gysin matrices at 4, diagonal classes at 3, Thom classes at rank 3 or 4,
/// blow-up matrices at 5). A check whose sizes need a larger degree bound
/// than the law has fails with the bound in its detail.
std::vector<CheckResult> run_verification(const FormalGroupLaw& F, int max_n);

}  // namespace orientcalc
