// Acceptance gate: runs every criterion suite and prints one line per
// criterion. Exits nonzero if any criterion fails.
#include <cstdio>

#include "ctlab/bench.hpp"

int main() {
  bool all = true;
  for (const std::string& name : ctlab::suite_names()) {
    ctlab::SuiteResult r = ctlab::run_suite(name);
    all = all && r.pass;
    std::printf("%s criterion %2d: %-14s (%zu checks, %.0f ms)\n",
                r.pass ? "PASS" : "FAIL", r.criterion, r.name.c_str(),
                r.reports.size(), r.ms);
    if (!r.pass)
      for (const auto& rep : r.reports)
        if (!rep.ok()) std::printf("    failed: %s\n", rep.to_json().c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
  return all ? 0 : 1;
}
