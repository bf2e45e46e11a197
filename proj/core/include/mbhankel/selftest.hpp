#pragma once

#include <string>
#include <vector>

namespace mbhankel::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  // worst observed error divided by its allowed tolerance; <= 1 passes
  double worst_ratio = 0.0;
  double seconds = 0.0;
  std::string detail;
};

struct Options {
  // Multiplies every tolerance. Values far below 1 turn the suite into a
  // negative control that must fail.
  double tolerance_scale = 1.0;
};

struct Report {
  std::vector<CriterionResult> criteria;
  double total_seconds = 0.0;
  bool all_passed = false;
};

inline constexpr int kCriterionCount = 11;

/// Criteria 1..10 individually. Exceptions are caught and reported as
/// failures.
CriterionResult run_criterion(int id, const Options& opts = {});

/// All criteria; criterion 11 is the wall time of the other ten.
Report run_all(const Options& opts = {});

}  // namespace mbhankel::selftest
