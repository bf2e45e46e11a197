#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mbhankel/coefficient.hpp"

namespace mbhankel::mb {

/// Vertical line alpha + i w, |w| <= half_height, sampled every `step`.
struct ContourSpec {
  double alpha = -0.5;
  double half_height = 40.0;
  double step = 0.25;
  double tolerance = 1e-10;  // relative target
  double abs_tolerance = 0.0;  // absolute floor for the tail test
};

/// Fit of ln|gbar(v + i w)| ~ ln C + P v + rate |w| + (power-law terms).
struct GrowthProfile {
  double a_est = 0.0;  // |rate|
  double p_est = 0.0;
  double c_est = 0.0;
  double signed_rate = 0.0;  // > 0 means exponential growth along the line
  double fit_residual = 0.0;
  bool admissible = false;  // a_est < pi/2 - kGrowthMargin
};

inline constexpr double kGrowthMargin = 0.05;

struct ContourIntegral {
  Complex value;  // (1 / 2 pi i) * integral over the line
  double error_estimate = 0.0;
  double step_difference = 0.0;
  double tail_bound = 0.0;
  double l1_norm = 0.0;  // (1 / 2 pi) * integral of |F|
  std::size_t nodes = 0;
};

struct TransformResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double imag_residue = 0.0;
  std::size_t nodes = 0;
  double tail_bound = 0.0;
  std::vector<ContourSpec> contours;  // one per coefficient term
  std::vector<std::string> warnings;
};

/// Contours chosen for each term of a coefficient plus the growth findings.
struct ContourPlan {
  std::vector<ContourSpec> contours;
  std::vector<GrowthProfile> growth;  // per term
  std::vector<std::string> warnings;
};

using Integrand = std::function<Complex(Complex)>;

/// (1 / 2 pi i) * int_{alpha - iT}^{alpha + iT} F(s) ds by the trapezoidal
/// rule at `step` and `step / 2`; returns the refined sum. Nodes at +w and
/// -w are summed as pairs in increasing |w|.
///
/// Throws ConvergenceError on a non-finite node value, or when |F| at the
/// ends exceeds tolerance * peak while the tail bound is above
/// abs_tolerance.
ContourIntegral integrate_contour(const Integrand& integrand, const ContourSpec& contour);

/// Theorem 1 kernel: Gamma(s+1) (q^2/4)^{-s}.
Complex theorem1_kernel(Complex s, double q);
/// Theorem 2 kernel: Gamma(2s+1) / Gamma(1/2 - s) 2^{6s+1} q^{-4s}.
Complex theorem2_kernel(Complex s, double q);

/// A(q) = (2 / q^2) (1 / 2 pi i) int gbar(s) Gamma(s+1) (q^2/4)^{-s} ds.
/// A single spec is applied to every term.
TransformResult theorem1_transform(const CoefficientFn& coef, double q, const ContourSpec& contour);
TransformResult theorem1_transform(const CoefficientFn& coef, double q,
                                   const std::vector<ContourSpec>& contours);
/// Automatic placement and sizing (auto_contour) at relative tolerance tol.
TransformResult theorem1_transform(const CoefficientFn& coef, double q, double tol = 1e-10);

/// A(q) = (2 sqrt(pi) / q^2) (1 / 2 pi i) int hbar(s) kernel2(s) ds.
TransformResult theorem2_transform(const CoefficientFn& coef, double q, const ContourSpec& contour);
TransformResult theorem2_transform(const CoefficientFn& coef, double q,
                                   const std::vector<ContourSpec>& contours);
TransformResult theorem2_transform(const CoefficientFn& coef, double q, double tol = 1e-10);

/// Dispatch on coef.kind with automatic contours.
TransformResult transform(const CoefficientFn& coef, double q, double tol = 1e-10);

/// Least-squares fit of ln|f(v + i w)| over v in v_samples and
/// 10 <= |w| <= w_max. Regressors: 1, v, |w|, ln|w|, v ln|w|.
GrowthProfile estimate_growth(const CoefficientFn::Term& f, const std::vector<double>& v_samples,
                              double w_max);
GrowthProfile estimate_growth(const CoefficientFn& coef, const std::vector<double>& v_samples,
                              double w_max);
/// Samples spread across the coefficient's own strip.
GrowthProfile estimate_growth(const CoefficientFn& coef);

/// Per-term contour placement.
///
/// alpha minimises the L1 norm of |term * kernel| on the line (any abscissa
/// right of the strip edge is equivalent by Cauchy's theorem), T follows the
/// observed decay and the step is halved until the trapezoid sum settles.
/// alpha_shift moves every abscissa by that amount (mirrored if it would
/// leave the admissible range). The absolute target is tol times the
/// larger of the terms' L1 norms and reference_scale. Throws GrowthError if
/// a term grows faster than the kernel decays, ConvergenceError if the caps
/// are hit.
ContourPlan auto_contour(const CoefficientFn& coef, double q, double tol, double alpha_shift = 0.0,
                         double reference_scale = 0.0);

}  // namespace mbhankel::mb
