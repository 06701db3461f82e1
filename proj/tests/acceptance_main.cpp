// End-to-end verification binary: runs every acceptance criterion and prints
// one PASS/FAIL line each.  Exit code 0 only when everything passes.

#include <cstdio>

#include "repkit/acceptance.hpp"

int main() {
  auto results = repkit::accept::run_acceptance();
  bool all = true;
  for (const auto& r : results) {
    std::printf("%s %s (%.0f ms): %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.millis,
                r.details.c_str());
    all = all && r.pass;
  }
  std::printf("%zu criteria, %s\n", results.size(), all ? "all passed" : "FAILURES PRESENT");
  return all ? 0 : 1;
}
