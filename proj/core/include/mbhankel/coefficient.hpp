#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mbhankel/complex_kernel.hpp"

namespace mbhankel {

enum class TheoremKind { theorem1, theorem2 };

/// Analytic continuation s -> gbar^(s)(0) of a Taylor-coefficient sequence.
///
/// The continuation is stored as a sum of additive terms. The contour
/// engine integrates each term on its own vertical line, which lets a term
/// with only algebraic decay be moved to where it is negligible.
struct CoefficientFn {
  using Term = std::function<Complex(Complex)>;

  std::vector<Term> terms;
  TheoremKind kind = TheoremKind::theorem1;
  double strip_min = -1.0;  // left edge of the regularity half-plane
  bool real_symmetric = true;
  std::map<std::string, double> params;
  std::string label;
  double min_q = 0.0;  // transforms require q > min_q

  Complex evaluate(Complex s) const {
    Complex sum(0.0, 0.0);
    for (const auto& t : terms) sum += t(s);
    return sum;
  }
  Complex operator()(Complex s) const { return evaluate(s); }
};

}  // namespace mbhankel
