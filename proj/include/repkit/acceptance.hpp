#pragma once

#include <string>
#include <vector>

namespace repkit::accept {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string details;
  double millis = 0.0;
};

// Runs every end-to-end criterion whose name contains `filter` (all when
// empty).  With `negative_control` an intentionally corrupted lattice
// expectation is appended; it must come back as a named failure.
std::vector<CriterionResult> run_acceptance(const std::string& filter = "",
                                            bool negative_control = false);

}  // namespace repkit::accept
