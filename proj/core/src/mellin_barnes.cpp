#include "mbhankel/mellin_barnes.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "mbhankel/errors.hpp"

namespace mbhankel::mb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kMaxHalfHeight = 2.0e4;
constexpr std::size_t kMaxNodes = 1000000;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Left edge of the half-plane where the kernel is regular.
double kernel_edge(TheoremKind kind) { return kind == TheoremKind::theorem1 ? -1.0 : -0.5; }

// Search range for the abscissa of a term.
void alpha_range(const CoefficientFn& coef, double& lo, double& hi) {
  const double edge = std::max(coef.strip_min, kernel_edge(coef.kind));
  if (coef.kind == TheoremKind::theorem1) {
    lo = edge + 0.1;
    hi = 120.0;
  } else {
    lo = edge + 0.05;
    hi = 20.0;
  }
}

Complex kernel(TheoremKind kind, Complex s, double q) {
  return kind == TheoremKind::theorem1 ? theorem1_kernel(s, q) : theorem2_kernel(s, q);
}

// Magnitude of F(alpha + i w), +inf when the evaluation fails.
double safe_abs(const Integrand& f, double alpha, double w) {
  try {
    const Complex v = f(Complex(alpha, w));
    if (!finite(v)) return kInf;
    return std::abs(v);
  } catch (const Error&) {
    return kInf;
  }
}

// log of a coarse estimate of int |F(alpha + i w)| dw over |w| <= 40.
double log_l1(const Integrand& f, double alpha) {
  constexpr double dw = 0.5;
  double sum = safe_abs(f, alpha, 0.0);
  for (int k = 1; k <= 80; ++k) {
    sum += safe_abs(f, alpha, k * dw) + safe_abs(f, alpha, -k * dw);
    if (!std::isfinite(sum)) return kInf;
  }
  if (sum == 0.0) return -kInf;
  return std::log(sum * dw);
}

double golden_min(const Integrand& f, double lo, double hi) {
  // coarse scan first: the objective may be flat or infinite in places
  constexpr int kScan = 24;
  double best = lo;
  double best_val = kInf;
  for (int i = 0; i <= kScan; ++i) {
    const double x = lo + (hi - lo) * i / kScan;
    const double v = log_l1(f, x);
    if (v < best_val) {
      best_val = v;
      best = x;
    }
  }
  if (!std::isfinite(best_val)) return best;
  const double span = (hi - lo) / kScan;
  double a = std::max(lo, best - span);
  double b = std::min(hi, best + span);
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - r * (b - a);
  double x2 = a + r * (b - a);
  double f1 = log_l1(f, x1);
  double f2 = log_l1(f, x2);
  for (int it = 0; it < 30 && b - a > 1e-3; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = log_l1(f, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = log_l1(f, x2);
    }
  }
  const double mid = 0.5 * (a + b);
  return log_l1(f, mid) <= best_val ? mid : best;
}

// Plain trapezoid (1/2pi) h sum F(alpha + i k h), |k h| <= T.
Complex trapezoid(const Integrand& f, double alpha, double T, double h, double& l1) {
  const auto n = static_cast<std::size_t>(std::ceil(T / h - 1e-9));
  Complex sum = f(Complex(alpha, 0.0));
  l1 = std::abs(sum);
  for (std::size_t k = 1; k <= n; ++k) {
    const double w = static_cast<double>(k) * h;
    const Complex a = f(Complex(alpha, w));
    const Complex b = f(Complex(alpha, -w));
    if (!finite(a) || !finite(b)) throw ConvergenceError("contour integrand is not finite");
    sum += a + b;
    l1 += std::abs(a) + std::abs(b);
  }
  l1 *= h / kTwoPi;
  return sum * (h / kTwoPi);
}

TransformResult run_transform(const CoefficientFn& coef, double q, const std::vector<ContourSpec>& specs) {
  if (!(q > 0.0)) throw DomainError("transform requires q > 0");
  if (!(q > coef.min_q)) {
    std::ostringstream os;
    os << coef.label << " requires q > " << coef.min_q;
    throw DomainError(os.str());
  }
  if (coef.terms.empty()) throw DomainError("coefficient has no terms");
  std::vector<ContourSpec> contours = specs;
  if (contours.size() == 1 && coef.terms.size() > 1) contours.assign(coef.terms.size(), specs.front());
  if (contours.size() != coef.terms.size()) throw DomainError("one contour per coefficient term is required");

  double lo = 0.0, hi = 0.0;
  alpha_range(coef, lo, hi);
  const double edge = std::max(coef.strip_min, kernel_edge(coef.kind));

  TransformResult out;
  Complex total(0.0, 0.0);
  double err = 0.0;
  for (std::size_t i = 0; i < coef.terms.size(); ++i) {
    const auto& spec = contours[i];
    if (!(spec.alpha > edge)) throw DomainError("contour abscissa is left of the regularity strip");
    const GrowthProfile g = estimate_growth(coef.terms[i], {edge + 0.25, edge + 0.5, edge + 0.75}, 40.0);
    if (g.signed_rate > kPi / 2 + kGrowthMargin) {
      std::ostringstream os;
      os << coef.label << " term " << i << " grows like exp(" << g.signed_rate
         << " |Im s|), faster than the kernel decays";
      throw GrowthError(os.str());
    }
    if (!g.admissible) {
      std::ostringstream os;
      os << coef.label << " term " << i << ": growth rate |A| = " << g.a_est
         << " is not below pi/2; contour sized from observed decay";
      out.warnings.push_back(os.str());
    }
    const auto& term = coef.terms[i];
    const TheoremKind kind = coef.kind;
    const Integrand f = [&term, kind, q](Complex s) { return term(s) * kernel(kind, s, q); };
    const ContourIntegral ci = integrate_contour(f, spec);
    total += ci.value;
    err += ci.error_estimate;
    out.tail_bound += ci.tail_bound;
    out.nodes += ci.nodes;
  }
  const double pref = coef.kind == TheoremKind::theorem1 ? 2.0 / (q * q) : 2.0 * std::sqrt(kPi) / (q * q);
  total *= pref;
  out.error_estimate = err * pref;
  out.tail_bound *= pref;
  out.contours = contours;
  out.value = total.real();
  out.imag_residue = std::abs(total.imag());
  if (!coef.real_symmetric && out.imag_residue > 10.0 * out.error_estimate) {
    throw DomainError(coef.label + ": transform has a non-negligible imaginary part");
  }
  return out;
}

}  // namespace

ContourIntegral integrate_contour(const Integrand& integrand, const ContourSpec& contour) {
  const double h = contour.step;
  const double T = contour.half_height;
  if (!(h > 0.0) || !(T >= 10.0 * h)) {
    throw DomainError("contour requires step > 0 and half_height >= 10 * step");
  }
  const double alpha = contour.alpha;
  const auto n = static_cast<std::size_t>(std::ceil(T / h - 1e-9));
  if (4 * n + 1 > kMaxNodes) throw ConvergenceError("contour needs too many nodes");

  auto eval = [&](double w) {
    const Complex v = integrand(Complex(alpha, w));
    if (!finite(v)) {
      std::ostringstream os;
      os << "contour integrand is not finite at s = " << alpha << " + " << w << "i";
      throw ConvergenceError(os.str());
    }
    return v;
  };

  // coarse nodes k h, then midpoints (k + 1/2) h; +w/-w pairs in order
  std::vector<double> mag(n + 1);
  const Complex f0 = eval(0.0);
  Complex coarse = f0;
  double l1 = std::abs(f0);
  mag[0] = std::abs(f0);
  for (std::size_t k = 1; k <= n; ++k) {
    const double w = static_cast<double>(k) * h;
    const Complex a = eval(w);
    const Complex b = eval(-w);
    coarse += a + b;
    l1 += std::abs(a) + std::abs(b);
    mag[k] = std::max(std::abs(a), std::abs(b));
  }
  Complex fine(0.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = (static_cast<double>(k) + 0.5) * h;
    const Complex a = eval(w);
    const Complex b = eval(-w);
    fine += a + b;
    l1 += std::abs(a) + std::abs(b);
  }
  const Complex s_h = coarse * (h / kTwoPi);
  const Complex s_h2 = (coarse + fine) * (0.5 * h / kTwoPi);

  ContourIntegral out;
  out.value = s_h2;
  out.nodes = 4 * n + 1;
  out.l1_norm = l1 * 0.5 * h / kTwoPi;
  out.step_difference = std::abs(s_h - s_h2);

  // envelope at the ends and at 0.8 T gives a local power law |F| ~ w^{-p}
  const double peak = *std::max_element(mag.begin(), mag.end());
  auto envelope = [&](std::size_t k) {
    const std::size_t lo = k >= 2 ? k - 2 : 0;
    const std::size_t hi = std::min(n, k + 2);
    return *std::max_element(mag.begin() + static_cast<std::ptrdiff_t>(lo),
                             mag.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  };
  const double end_mag = envelope(n);
  const auto k_in = static_cast<std::size_t>(0.8 * static_cast<double>(n));
  const double in_mag = envelope(k_in);
  double tail = 0.0;
  if (end_mag > 0.0) {
    const double w_in = static_cast<double>(k_in) * h;
    double p = (in_mag > 0.0 && w_in > 0.0) ? std::log(in_mag / end_mag) / std::log(T / w_in) : 0.0;
    if (!(p > 1.0)) p = 1.0;
    tail = p > 1.0 + 1e-9 ? 2.0 * end_mag * T / (p - 1.0) / kTwoPi : kInf;
    if (p <= 1.0 + 1e-9 && end_mag <= contour.tolerance * peak * 1e-3) {
      // flat envelope far below the peak: treat the remainder like 1/w^2
      tail = 2.0 * end_mag * T / kTwoPi;
    }
  }
  if (end_mag > contour.tolerance * peak && tail > contour.abs_tolerance) {
    std::ostringstream os;
    os << "contour integrand has not decayed at |w| = " << T << " (|F| = " << end_mag
       << ", peak " << peak << ")";
    throw ConvergenceError(os.str(), tail);
  }
  out.tail_bound = tail;
  out.error_estimate = out.step_difference + tail + 64.0 * kEps * out.l1_norm;
  return out;
}

Complex theorem1_kernel(Complex s, double q) {
  return std::exp(log_gamma_c(s + 1.0) - s * std::log(q * q / 4.0));
}

Complex theorem2_kernel(Complex s, double q) {
  return std::exp(log_gamma_c(2.0 * s + 1.0) + (6.0 * s + 1.0) * std::log(2.0) - 4.0 * s * std::log(q)) *
         rgamma_c(0.5 - s);
}

GrowthProfile estimate_growth(const CoefficientFn::Term& f, const std::vector<double>& v_samples,
                              double w_max) {
  if (v_samples.empty() || !(w_max > 10.0)) throw DomainError("estimate_growth needs samples and w_max > 10");
  std::vector<std::array<double, 5>> rows;
  std::vector<double> rhs;
  const int nw = 13;
  for (double v : v_samples) {
    for (int j = 0; j < nw; ++j) {
      const double w = 10.0 + (w_max - 10.0) * j / (nw - 1);
      for (double sign : {1.0, -1.0}) {
        Complex val;
        try {
          val = f(Complex(v, sign * w));
        } catch (const Error& e) {
          throw ConvergenceError(std::string("estimate_growth: evaluation failed: ") + e.what());
        }
        const double m = std::abs(val);
        if (!(m > 0.0) || !std::isfinite(m)) continue;
        const double lw = std::log(w);
        rows.push_back({1.0, v, w, lw, v * lw});
        rhs.push_back(std::log(m));
      }
    }
  }
  GrowthProfile g;
  if (rows.empty()) {
    // identically zero: no growth at all
    g.admissible = true;
    return g;
  }
  if (rows.size() * 2 < v_samples.size() * nw * 2) {
    throw ConvergenceError("estimate_growth: coefficient vanishes or overflows on most of the grid");
  }
  Eigen::MatrixXd X(static_cast<Eigen::Index>(rows.size()), 5);
  Eigen::VectorXd y(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < 5; ++c) X(static_cast<Eigen::Index>(r), c) = rows[r][static_cast<std::size_t>(c)];
    y(static_cast<Eigen::Index>(r)) = rhs[r];
  }
  const Eigen::VectorXd beta = X.colPivHouseholderQr().solve(y);
  const Eigen::VectorXd resid = X * beta - y;
  g.signed_rate = beta(2);
  g.a_est = std::abs(beta(2));
  g.p_est = beta(1);
  g.c_est = std::exp(beta(0));
  g.fit_residual = std::sqrt(resid.squaredNorm() / static_cast<double>(rows.size()));
  g.admissible = g.a_est < kPi / 2 - kGrowthMargin;
  return g;
}

GrowthProfile estimate_growth(const CoefficientFn& coef, const std::vector<double>& v_samples, double w_max) {
  return estimate_growth([&coef](Complex s) { return coef.evaluate(s); }, v_samples, w_max);
}

GrowthProfile estimate_growth(const CoefficientFn& coef) {
  const double edge = std::max(coef.strip_min, kernel_edge(coef.kind));
  const double width = -edge;  // strip runs up to Re s = 0
  return estimate_growth(coef, {edge + 0.25 * width, edge + 0.5 * width, edge + 0.75 * width}, 40.0);
}

ContourPlan auto_contour(const CoefficientFn& coef, double q, double tol, double alpha_shift,
                         double reference_scale) {
  if (!(q > 0.0)) throw DomainError("auto_contour requires q > 0");
  if (!(tol > 0.0)) throw DomainError("auto_contour requires tol > 0");
  double lo = 0.0, hi = 0.0;
  alpha_range(coef, lo, hi);
  const double edge = std::max(coef.strip_min, kernel_edge(coef.kind));
  const TheoremKind kind = coef.kind;

  ContourPlan plan;
  const std::size_t nt = coef.terms.size();
  std::vector<Integrand> fs;
  std::vector<double> alphas(nt);
  std::vector<double> l1(nt);
  for (std::size_t i = 0; i < nt; ++i) {
    const auto& term = coef.terms[i];
    const GrowthProfile g = estimate_growth(term, {edge + 0.25, edge + 0.5, edge + 0.75}, 40.0);
    plan.growth.push_back(g);
    if (g.signed_rate > kPi / 2 + kGrowthMargin) {
      std::ostringstream os;
      os << coef.label << " term " << i << " grows like exp(" << g.signed_rate
         << " |Im s|), faster than the kernel decays";
      throw GrowthError(os.str());
    }
    if (!g.admissible) {
      std::ostringstream os;
      os << coef.label << " term " << i << ": growth rate |A| = " << g.a_est
         << " is not below pi/2; contour sized from observed decay";
      plan.warnings.push_back(os.str());
    }
    fs.emplace_back([&term, kind, q](Complex s) { return term(s) * kernel(kind, s, q); });
    double a = golden_min(fs.back(), lo, hi);
    if (alpha_shift != 0.0) {
      double shifted = a + alpha_shift;
      if (shifted < lo || shifted > hi) shifted = a - alpha_shift;
      a = std::clamp(shifted, lo, hi);
    }
    alphas[i] = a;
    l1[i] = std::exp(log_l1(fs.back(), a)) / kTwoPi;
  }
  double scale = std::isfinite(reference_scale) ? std::max(0.0, reference_scale) : 0.0;
  for (double v : l1) {
    if (std::isfinite(v)) scale = std::max(scale, v);
  }
  if (!(scale > 0.0)) scale = 1.0;
  const double target = tol * scale;

  for (std::size_t i = 0; i < nt; ++i) {
    const Integrand& f = fs[i];
    const double alpha = alphas[i];
    // half-height from the observed decay
    constexpr double dw = 0.5;
    double T = 0.0;
    for (double w = dw;; w += dw) {
      const double m = std::max(safe_abs(f, alpha, w), safe_abs(f, alpha, -w));
      if (!std::isfinite(m)) {
        throw ConvergenceError(coef.label + ": integrand not finite while sizing the contour");
      }
      if (w >= 4.0 && m * std::max(w, 1.0) < 0.01 * target) {
        // also require visible decay so the tail law is measurable
        const double m_in = std::max(safe_abs(f, alpha, 0.8 * w), safe_abs(f, alpha, -0.8 * w));
        const double p_loc = m > 0.0 ? std::log(m_in / m) / std::log(1.25) : kInf;
        if (p_loc > 1.5) {
          T = w;
          break;
        }
      }
      if (w > kMaxHalfHeight) {
        throw ConvergenceError(coef.label + ": integrand does not decay within the height cap", m * w);
      }
    }
    // step: halve until the trapezoid sum settles
    double h = std::min(0.5, T / 10.0);
    double l1_h = 0.0;
    Complex prev = trapezoid(f, alpha, T, h, l1_h);
    for (;;) {
      if (T / h > static_cast<double>(kMaxNodes) / 4.0) {
        throw ConvergenceError(coef.label + ": step refinement exceeded the node cap");
      }
      const double h2 = h / 2.0;
      double l1_h2 = 0.0;
      const Complex cur = trapezoid(f, alpha, T, h2, l1_h2);
      const double diff = std::abs(cur - prev);
      if (diff < std::max(0.1 * target, 64.0 * kEps * l1_h2)) break;
      h = h2;
      prev = cur;
    }
    ContourSpec spec;
    spec.alpha = alpha;
    spec.half_height = std::max(T, 10.0 * h);
    spec.step = h;
    spec.tolerance = tol;
    spec.abs_tolerance = target;
    plan.contours.push_back(spec);
  }
  return plan;
}

TransformResult theorem1_transform(const CoefficientFn& coef, double q, const ContourSpec& contour) {
  return theorem1_transform(coef, q, std::vector<ContourSpec>{contour});
}

TransformResult theorem1_transform(const CoefficientFn& coef, double q, const std::vector<ContourSpec>& contours) {
  if (coef.kind != TheoremKind::theorem1) throw DomainError(coef.label + " is not a Theorem 1 coefficient");
  return run_transform(coef, q, contours);
}

TransformResult theorem1_transform(const CoefficientFn& coef, double q, double tol) {
  if (coef.kind != TheoremKind::theorem1) throw DomainError(coef.label + " is not a Theorem 1 coefficient");
  if (!(q > coef.min_q)) return run_transform(coef, q, {ContourSpec{}});  // raises the domain error
  ContourPlan plan = auto_contour(coef, q, tol);
  TransformResult r = run_transform(coef, q, plan.contours);
  r.warnings = plan.warnings;
  return r;
}

TransformResult theorem2_transform(const CoefficientFn& coef, double q, const ContourSpec& contour) {
  return theorem2_transform(coef, q, std::vector<ContourSpec>{contour});
}

TransformResult theorem2_transform(const CoefficientFn& coef, double q, const std::vector<ContourSpec>& contours) {
  if (coef.kind != TheoremKind::theorem2) throw DomainError(coef.label + " is not a Theorem 2 coefficient");
  return run_transform(coef, q, contours);
}

TransformResult theorem2_transform(const CoefficientFn& coef, double q, double tol) {
  if (coef.kind != TheoremKind::theorem2) throw DomainError(coef.label + " is not a Theorem 2 coefficient");
  if (!(q > coef.min_q)) return run_transform(coef, q, {ContourSpec{}});
  ContourPlan plan = auto_contour(coef, q, tol);
  TransformResult r = run_transform(coef, q, plan.contours);
  r.warnings = plan.warnings;
  return r;
}

TransformResult transform(const CoefficientFn& coef, double q, double tol) {
  return coef.kind == TheoremKind::theorem1 ? theorem1_transform(coef, q, tol) : theorem2_transform(coef, q, tol);
}

}  // namespace mbhankel::mb
