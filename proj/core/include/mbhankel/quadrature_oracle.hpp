#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace mbhankel::oracle {

struct RealResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int segments = 0;
};

struct HankelOptions {
  // f is treated as zero beyond this point (Gaussian factors).
  double cutoff = std::numeric_limits<double>::infinity();
  int max_cells = 200;
};

/// int_0^inf x f(x) J0(qx) dx, integrated cell by cell between consecutive
/// zeros of J0(qx). The partial sums are accelerated with Wynn's epsilon
/// algorithm (depth <= 12). tol is relative.
///
/// Throws ConvergenceError if the accelerated sum has not settled within
/// max_cells cells.
RealResult hankel0_direct(const std::function<double(double)>& f, double q, double tol,
                          const HankelOptions& opts = {});

/// int_0^inf x^{s-1} g(x) dx: adaptive quadrature of (1/s) int_0^{U^s}
/// g(t^{1/s}) dt plus a power-law tail correction beyond U = upper.
/// Throws ConvergenceError when the tail is not integrable or the error
/// exceeds tol * |value|.
RealResult mellin_forward(const std::function<double(double)>& g, double s, double upper, double tol);

/// Wynn epsilon extrapolation of a sequence of partial sums, even columns
/// up to max_depth. Returns the estimate built from the latest entries.
double wynn_epsilon(const std::vector<double>& partial_sums, int max_depth = 12);

}  // namespace mbhankel::oracle
