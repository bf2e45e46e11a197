// Runs every acceptance criterion and prints one line per criterion.

#include <cstdio>

#include "mbhankel/selftest.hpp"

int main() {
  const auto rep = mbhankel::selftest::run_all();
  for (const auto& c : rep.criteria) {
    std::printf("criterion %2d %s  %-56s worst/tol %.3g  (%.2f s)  %s\n", c.id, c.passed ? "PASS" : "FAIL",
                c.name.c_str(), c.worst_ratio, c.seconds, c.detail.c_str());
  }
  std::printf("%s in %.2f s\n", rep.all_passed ? "all criteria passed" : "SOME CRITERIA FAILED", rep.total_seconds);
  return rep.all_passed ? 0 : 1;
}
