#include "mbhankel/selftest.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "mbhankel/asymptotics.hpp"
#include "mbhankel/coefficient_catalog.hpp"
#include "mbhankel/errors.hpp"
#include "mbhankel/mellin_barnes.hpp"
#include "mbhankel/quadrature.hpp"
#include "mbhankel/quadrature_oracle.hpp"
#include "mbhankel/special_functions.hpp"

namespace mbhankel::selftest {
namespace {

using catalog::Example;
using catalog::ExampleParams;

constexpr double kContourTol = 1e-10;

struct Tracker {
  double scale = 1.0;
  double worst = 0.0;
  std::string where;

  void check(double observed, double allowed, const std::string& what) {
    const double ratio = std::isfinite(observed) ? observed / (allowed * scale) : INFINITY;
    if (where.empty() || ratio > worst) {
      worst = ratio;
      where = what;
    }
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double contour(Example ex, const ExampleParams& p, double q) {
  return mb::transform(catalog::coefficient(ex, p), q, kContourTol).value;
}

void criterion1(Tracker& t, std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  for (double a : {0.5, 1.0, 2.0}) {
    for (double q : {0.5, 1.0, 2.0, 5.0, 10.0}) {
      const ExampleParams p{a, 1.0, 0};
      t.check(rel(contour(Example::A1, p, q), catalog::closed_form(Example::A1, q, p)), 1e-8,
              fmt("a=%g q=%g", a, q));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.check(secs, 1.0, "runtime");
  detail = fmt("grid time %.3f s", secs);
}

void criterion2(Tracker& t) {
  for (auto [a, c] : {std::pair{1.0, 0.5}, std::pair{1.0, 1.0}}) {
    for (double q : {1.0, 2.0, 5.0}) {
      const ExampleParams p{a, c, 0};
      const double closed = catalog::closed_form(Example::A2, q, p);
      t.check(rel(contour(Example::A2, p, q), closed), 1e-7, fmt("a=%g c=%g q=%g", a, c, q));
      if (q == 2.0 && c == 1.0) {
        const auto o = oracle::hankel0_direct(catalog::example_function(Example::A2, p), q, 1e-10,
                                              {catalog::oracle_cutoff(Example::A2, p), 200});
        t.check(rel(o.value, closed), 1e-7, "oracle referee at (1,1,2)");
      }
    }
  }
}

void criterion3(Tracker& t) {
  for (Example ex : {Example::A3, Example::A4}) {
    for (int n = 0; n <= 3; ++n) {
      for (double q : {1.0, 2.0, 5.0}) {
        const ExampleParams p{1.0, 1.0, n};
        t.check(rel(contour(ex, p, q), catalog::closed_form(ex, q, p)), 1e-7,
                catalog::label(ex) + fmt(" n=%g q=%g", n, q));
      }
    }
  }
}

void criterion4(Tracker& t) {
  const ExampleParams p{1.0, 1.0, 0};
  for (double q : {2.0, 5.0}) {
    const double closed = catalog::closed_form(Example::A5, q, p);
    t.check(rel(contour(Example::A5, p, q), closed), 1e-7, fmt("q=%g", q));
    CoefficientFn piece = catalog::coef_a5(p.a, p.c);
    piece.terms.erase(piece.terms.begin());
    // sized against |A5|: the piece alone only decays like 1/|Im s|^2
    const auto plan = mb::auto_contour(piece, q, kContourTol, 0.0, std::abs(closed));
    const double v = mb::theorem1_transform(piece, q, plan.contours).value;
    t.check(std::abs(v) / std::abs(closed), 1e-8, fmt("1F2 piece q=%g", q));
  }
}

void criterion5(Tracker& t) {
  for (double ac : {0.5, 1.0}) {
    const ExampleParams p{ac, ac, 0};
    for (double q : {2.0, 5.0, 10.0}) {
      const auto tr = mb::transform(catalog::coef_a6(ac, ac), q, kContourTol);
      const auto psi = catalog::a6_series_psi(q, ac, ac);
      const auto o = oracle::hankel0_direct(catalog::example_function(Example::A6, p), q, 1e-10,
                                            {catalog::oracle_cutoff(Example::A6, p), 200});
      const std::string cell = fmt("a=c=%g q=%g", ac, q);
      t.check(rel(tr.value, psi.value), 1e-6, cell + " contour/psi");
      t.check(rel(tr.value, o.value), 1e-6, cell + " contour/oracle");
      t.check(rel(psi.value, o.value), 1e-6, cell + " psi/oracle");
      if (q >= 5.0) {
        const auto s2 = catalog::a6_series_2f0(q, ac, ac);
        t.check(std::abs(s2.value - tr.value), s2.error_bound + tr.error_estimate, cell + " 2F0 within bound");
      }
    }
    // q -> 0 against direct quadrature of int x e^{-a^2x^2} / (x^2 + c^2) dx
    quad::QuadOptions qo;
    qo.rel_tol = 1e-13;
    const auto direct = quad::integrate_adaptive(
        [ac](double x) { return x * std::exp(-ac * ac * x * x) / (x * x + ac * ac); }, 0.0, INFINITY, qo);
    t.check(rel(catalog::a6_q_zero(ac, ac), direct.value), 1e-9, fmt("q->0 a=c=%g", ac));
    // large q at qc = 15
    const double q15 = 15.0 / ac;
    const double ratio = catalog::a6_series_psi(q15, ac, ac).value / asym::a6_large_q(q15, ac, ac);
    t.check(std::abs(ratio - 1.0), 1e-3, fmt("large-q ratio a=c=%g", ac));
  }
  // a -> 0 collapse to K0(qc)
  const double k0 = sf::bessel_k0(2.0);
  t.check(rel(catalog::a6_series_psi(2.0, 1e-4, 1.0).value, k0), 1e-6, "a->0 psi series");
  t.check(rel(mb::transform(catalog::coef_a6(1e-4, 1.0), 2.0, kContourTol).value, k0), 1e-6, "a->0 contour");
}

void criterion6(Tracker& t) {
  for (double q : {1.0, 2.0, 5.0}) {
    const ExampleParams p{1.0, 1.0, 0};
    t.check(rel(contour(Example::A7, p, q), catalog::closed_form(Example::A7, q, p)), 1e-7, fmt("q=%g", q));
  }
}

void criterion7(Tracker& t) {
  asym::DerivativeTable d;
  d.origin = "exp(-x)";
  for (int k = 0; k < 40; ++k) d.values.push_back(k % 2 == 0 ? 1.0 : -1.0);
  for (double q : {5.0, 10.0}) {
    const double j0 = 1.0 / std::sqrt(1.0 + q * q);
    const double j1 = (1.0 - 1.0 / std::sqrt(1.0 + q * q)) / q;
    const double h0 = std::pow(1.0 + q * q, -1.5);
    for (int m = 1; m <= 6; ++m) {
      const auto a = asym::willis_j0_series(d, q, m);
      const auto b = asym::willis_j1_series(d, q, m);
      const auto c = asym::hankel0_odd_series(d, q, m);
      t.check(std::abs(a.value - j0), a.first_omitted, fmt("J0 series q=%g m=%g", q, m));
      t.check(std::abs(b.value - j1), b.first_omitted, fmt("J1 series q=%g m=%g", q, m));
      t.check(std::abs(c.value - h0), c.first_omitted, fmt("odd series q=%g m=%g", q, m));
    }
  }
}

void criterion8(Tracker& t) {
  for (double s : {0.2, 0.5, 0.8}) {
    const auto r = oracle::mellin_forward([](double x) { return 1.0 / (1.0 + x); }, s, 1e8, 1e-8);
    t.check(rel(r.value, kPi / std::sin(kPi * s)), 1e-6, fmt("s=%g", s));
  }
}

void path_cell(Tracker& t, const CoefficientFn& coef, double q, const std::string& what) {
  const auto p1 = mb::auto_contour(coef, q, kContourTol, 0.0);
  const auto p2 = mb::auto_contour(coef, q, kContourTol, 0.3);
  const auto r1 = coef.kind == TheoremKind::theorem1 ? mb::theorem1_transform(coef, q, p1.contours)
                                                     : mb::theorem2_transform(coef, q, p1.contours);
  const auto r2 = coef.kind == TheoremKind::theorem1 ? mb::theorem1_transform(coef, q, p2.contours)
                                                     : mb::theorem2_transform(coef, q, p2.contours);
  bool distinct = false;
  for (std::size_t i = 0; i < r1.contours.size(); ++i) {
    if (r1.contours[i].alpha != r2.contours[i].alpha) distinct = true;
  }
  if (!distinct) {
    t.check(INFINITY, 1.0, what + " (abscissae coincide)");
    return;
  }
  t.check(std::abs(r1.value - r2.value), r1.error_estimate + r2.error_estimate, what);
}

void criterion9(Tracker& t) {
  for (double a : {0.5, 1.0, 2.0}) {
    for (double q : {0.5, 1.0, 2.0, 5.0, 10.0}) path_cell(t, catalog::coef_a1(a), q, fmt("a1 a=%g q=%g", a, q));
  }
  for (double c : {0.5, 1.0}) {
    for (double q : {1.0, 2.0, 5.0}) path_cell(t, catalog::coef_a2(1.0, c), q, fmt("a2 c=%g q=%g", c, q));
  }
  for (int n = 0; n <= 3; ++n) {
    for (double q : {1.0, 2.0, 5.0}) {
      path_cell(t, catalog::coef_a3(1.0, n), q, fmt("a3 n=%g q=%g", n, q));
      path_cell(t, catalog::coef_a4(1.0, n), q, fmt("a4 n=%g q=%g", n, q));
    }
  }
  for (double q : {2.0, 5.0}) path_cell(t, catalog::coef_a5(1.0, 1.0), q, fmt("a5 q=%g", q));
  for (double ac : {0.5, 1.0}) {
    for (double q : {2.0, 5.0, 10.0}) path_cell(t, catalog::coef_a6(ac, ac), q, fmt("a6 a=c=%g q=%g", ac, q));
  }
  for (double q : {1.0, 2.0, 5.0}) path_cell(t, catalog::coef_a7(1.0), q, fmt("a7 q=%g", q));
}

// (-1)^{m-n} a^{2m} sum_{p=n}^{m} C(m,p) p! / ((p-n)! (p+n)!) w^p
double bessel_product_direct_sum(int m, int n, double a, double c) {
  const double w = c * c / (4.0 * a * a);
  double sum = 0.0;
  for (int p = n; p <= m; ++p) {
    const double lt = std::lgamma(m + 1.0) - std::lgamma(m - p + 1.0) - std::lgamma(p - n + 1.0) -
                      std::lgamma(p + n + 1.0);
    sum += std::exp(lt) * std::pow(w, p);
  }
  return ((m - n) % 2 == 0 ? 1.0 : -1.0) * std::pow(a, 2.0 * m) * sum;
}

void criterion10(Tracker& t) {
  for (auto [m, n] : {std::pair{2, 1}, std::pair{4, 2}, std::pair{5, 0}}) {
    t.check(rel(catalog::appendix_a_derivatives(m, n, 1.0, 1.0), bessel_product_direct_sum(m, n, 1.0, 1.0)), 1e-10,
            fmt("m=%g n=%g", m, n));
  }
  for (auto [a, c] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}, std::pair{2.0, 0.5}}) {
    const auto coef = catalog::coef_a2(a, c);
    for (int m = 0; m <= 10; ++m) {
      const double sign = m % 2 == 0 ? 1.0 : -1.0;
      const double lhs = sign * catalog::appendix_a_derivatives(m, 0, a, c);
      t.check(rel(lhs, coef.evaluate(Complex(m, 0.0)).real()), 1e-10, fmt("n=0 row a=%g c=%g m=%g", a, c, m));
    }
  }
}

const char* criterion_name(int id) {
  switch (id) {
    case 1: return "Gaussian transform vs closed form";
    case 2: return "Gaussian-times-J0 transform vs closed form";
    case 3: return "inverse powers (integer and half-integer) vs K_n";
    case 4: return "J0/(x^2+c^2) transform and vanishing 1F2 piece";
    case 5: return "Gaussian/(x^2+c^2): contour, series, oracle and limits";
    case 6: return "Theorem-2 transform of (x^4+a^4)^-1/2";
    case 7: return "large-q series for exp(-x)";
    case 8: return "forward Mellin check of the master theorem";
    case 9: return "contour path independence";
    case 10: return "Laguerre derivative formula";
    case 11: return "whole suite runtime";
    default: return "unknown";
  }
}

}  // namespace

CriterionResult run_criterion(int id, const Options& opts) {
  CriterionResult r;
  r.id = id;
  r.name = criterion_name(id);
  Tracker t;
  t.scale = opts.tolerance_scale;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: criterion1(t, r.detail); break;
      case 2: criterion2(t); break;
      case 3: criterion3(t); break;
      case 4: criterion4(t); break;
      case 5: criterion5(t); break;
      case 6: criterion6(t); break;
      case 7: criterion7(t); break;
      case 8: criterion8(t); break;
      case 9: criterion9(t); break;
      case 10: criterion10(t); break;
      default: throw DomainError("criterion id must be 1..10 (11 is measured by run_all)");
    }
    r.worst_ratio = t.worst;
    r.passed = t.worst <= 1.0;
    if (!t.where.empty()) r.detail += (r.detail.empty() ? "" : "; ") + std::string("worst at ") + t.where;
  } catch (const std::exception& e) {
    r.passed = false;
    r.worst_ratio = INFINITY;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report run_all(const Options& opts) {
  Report rep;
  const auto start = std::chrono::steady_clock::now();
  for (int id = 1; id < kCriterionCount; ++id) rep.criteria.push_back(run_criterion(id, opts));
  rep.total_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CriterionResult last;
  last.id = kCriterionCount;
  last.name = criterion_name(kCriterionCount);
  last.seconds = rep.total_seconds;
  last.worst_ratio = rep.total_seconds / (60.0 * opts.tolerance_scale);
  last.passed = last.worst_ratio <= 1.0;
  last.detail = fmt("%.2f s of 60 s", rep.total_seconds);
  rep.criteria.push_back(last);
  rep.all_passed = true;
  for (const auto& c : rep.criteria) rep.all_passed = rep.all_passed && c.passed;
  return rep;
}

}  // namespace mbhankel::selftest
