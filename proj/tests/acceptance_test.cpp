// Runs the ten reference criteria and prints one line per criterion.

#include <cstdio>

#include "ascurve/reference_checks.hpp"

int main() {
  using namespace ascurve;
  int failures = 0;
  for (unsigned id = 1; id <= kCriterionCount; ++id) {
    const auto report = run_reference_check(id);
    const bool ok = report.status() == CheckStatus::pass;
    failures += !ok;
    std::printf("[%s] criterion %2u: %s (%.2f s, limit %.0f s, %zu checks, %zu divergent)\n",
                ok ? "PASS" : "FAIL", id, report.title.c_str(), report.seconds,
                report.limit_seconds, report.checks.size(), report.count(CheckStatus::divergent));
    for (const auto& c : report.checks)
      if (c.status != CheckStatus::pass)
        std::printf("    %s %s: expected %s, got %s%s%s\n", std::string(to_string(c.status)).c_str(),
                    c.key.c_str(), c.expected.c_str(), c.actual.c_str(),
                    c.note.empty() ? "" : " -- ", c.note.c_str());
  }
  std::printf("%u criteria, %d failed\n", kCriterionCount, failures);
  return failures == 0 ? 0 : 1;
}
