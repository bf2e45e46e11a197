#pragma once

#include <string>
#include <vector>

namespace mbhankel {

/// Partial sums of a (possibly divergent) series and where it was cut.
struct SeriesResult {
  double value = 0.0;
  std::vector<double> partial_sums;
  int truncation_index = 0;  // value == partial_sums[truncation_index]
  double first_omitted = 0.0;  // |first term not summed|
  double error_bound = 0.0;    // first_omitted, or a composite bound where documented
  std::vector<std::string> warnings;
};

}  // namespace mbhankel
