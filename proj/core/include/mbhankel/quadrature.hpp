#pragma once

#include <cstddef>
#include <functional>
#include <limits>

namespace mbhankel::quad {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double l1_norm = 0.0;
  std::size_t intervals = 0;
  bool converged = false;
};

struct QuadOptions {
  double abs_tol = 0.0;
  double rel_tol = 1e-13;
  std::size_t max_intervals = 4000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b]. Either end may be
/// infinite (mapped with x = a + t/(1-t) or x = t/(1-t^2)). Stops when the
/// summed interval error is below max(abs_tol, rel_tol * |value|).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadOptions& opts = {});

}  // namespace mbhankel::quad
