#include "mbhankel/quadrature_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "mbhankel/errors.hpp"
#include "mbhankel/quadrature.hpp"
#include "mbhankel/special_functions.hpp"

namespace mbhankel::oracle {

double wynn_epsilon(const std::vector<double>& partial_sums, int max_depth) {
  if (partial_sums.empty()) return 0.0;
  std::vector<double> prev(partial_sums.size() + 1, 0.0);
  std::vector<double> cur = partial_sums;
  std::vector<double> next;
  double best = cur.back();
  for (int k = 0; k < max_depth && cur.size() > 1; ++k) {
    next.assign(cur.size() - 1, 0.0);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double d = cur[i + 1] - cur[i];
      if (d == 0.0 || !std::isfinite(d)) return best;  // column has converged
      next[i] = prev[i + 1] + 1.0 / d;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if ((k + 1) % 2 == 0) {
      if (!std::isfinite(cur.back())) return best;
      best = cur.back();
    }
  }
  return best;
}

RealResult hankel0_direct(const std::function<double(double)>& f, double q, double tol, const HankelOptions& opts) {
  if (!(q > 0.0)) throw DomainError("hankel0_direct requires q > 0");
  if (!(tol > 0.0)) throw DomainError("hankel0_direct requires tol > 0");
  auto integrand = [&](double x) { return x * f(x) * sf::bessel_j0(q * x); };

  std::vector<double> sums;
  double sum = 0.0;
  double cell_err = 0.0;
  double first = 0.0;
  double prev_est = 0.0;
  double last_delta = std::numeric_limits<double>::infinity();
  int settled = 0;
  int negligible = 0;
  double lo = 0.0;
  for (int k = 1; k <= opts.max_cells; ++k) {
    double hi = sf::bessel_j0_zeros(k) / q;
    const bool at_cutoff = hi >= opts.cutoff;
    if (at_cutoff) hi = opts.cutoff;
    quad::QuadOptions qo;
    qo.rel_tol = tol / 10.0;
    qo.abs_tol = k == 1 ? 0.0 : tol / 100.0 * std::abs(first);
    const auto cell = quad::integrate_adaptive(integrand, lo, hi, qo);
    if (!cell.converged) throw ConvergenceError("hankel0_direct: cell quadrature failed", cell.error_estimate);
    if (k == 1) first = cell.value;
    sum += cell.value;
    cell_err += cell.error_estimate;
    sums.push_back(sum);
    lo = hi;

    if (at_cutoff) return {sum, cell_err, k};
    if (std::abs(cell.value) <= 1e-3 * tol * std::abs(sum)) {
      if (++negligible >= 3) return {sum, cell_err + 3.0 * std::abs(cell.value), k};
    } else {
      negligible = 0;
    }
    const std::size_t window = std::min<std::size_t>(sums.size(), 25);
    const std::vector<double> tail(sums.end() - static_cast<std::ptrdiff_t>(window), sums.end());
    const double est = wynn_epsilon(tail, 12);
    if (k >= 4) {
      last_delta = std::abs(est - prev_est);
      if (last_delta <= tol * std::abs(est)) {
        if (++settled >= 2) return {est, last_delta + cell_err, k};
      } else {
        settled = 0;
      }
    }
    prev_est = est;
  }
  throw ConvergenceError("hankel0_direct: accelerated sum did not settle within the cell limit", last_delta);
}

RealResult mellin_forward(const std::function<double(double)>& g, double s, double upper, double tol) {
  if (!(s > 0.0)) throw DomainError("mellin_forward requires s > 0");
  if (!(upper > 0.0)) throw DomainError("mellin_forward requires upper > 0");
  if (!(tol > 0.0)) throw DomainError("mellin_forward requires tol > 0");
  const double inv_s = 1.0 / s;
  auto h = [&](double t) { return g(std::pow(t, inv_s)); };
  quad::QuadOptions qo;
  qo.rel_tol = tol / 10.0;
  qo.max_intervals = 20000;
  const auto body = quad::integrate_adaptive(h, 0.0, std::pow(upper, s), qo);
  if (!std::isfinite(body.value)) throw ConvergenceError("mellin_forward: endpoint singularity is not integrable");

  // tail beyond U from g ~ C x^{-d}, d measured on [U/2, U] and [U/4, U/2]
  const double g1 = g(upper), g2 = g(upper / 2.0), g4 = g(upper / 4.0);
  double tail = 0.0;
  double tail_err = 0.0;
  if (g1 != 0.0) {
    if (!(g1 * g2 > 0.0) || !(g2 * g4 > 0.0)) {
      throw ConvergenceError("mellin_forward: integrand is not monotone near the upper limit");
    }
    const double d1 = std::log(g2 / g1) / std::log(2.0);
    const double d2 = std::log(g4 / g2) / std::log(2.0);
    if (!(d1 > s)) throw ConvergenceError("mellin_forward: tail is not integrable");
    const double scale = g1 * std::pow(upper, s);
    tail = scale / (d1 - s);
    tail_err = d2 > s ? std::abs(tail - scale / (d2 - s)) : std::abs(tail);
  }
  RealResult r;
  r.value = body.value * inv_s + tail;
  r.error_estimate = body.error_estimate * inv_s + tail_err;
  r.segments = static_cast<int>(body.intervals);
  if (r.error_estimate > tol * std::abs(r.value)) {
    throw ConvergenceError("mellin_forward: error bound exceeds tolerance", r.error_estimate);
  }
  return r;
}

}  // namespace mbhankel::oracle
