#pragma once

#include <functional>
#include <string>

#include "mbhankel/coefficient.hpp"
#include "mbhankel/series.hpp"

namespace mbhankel::catalog {

enum class Example { A1, A2, A3, A4, A5, A6, A7 };

struct ExampleParams {
  double a = 1.0;
  double c = 1.0;
  int n = 0;
};

// Generating functions f(x) = g(x^2) (A7: h(x^4)):
//   A1 e^{-a^2 x^2}                 A2 e^{-a^2 x^2} J0(c x)
//   A3 (x^2 + a^2)^{-n-1}           A4 (x^2 + a^2)^{-n-3/2}
//   A5 J0(a x) / (x^2 + c^2)        A6 e^{-a^2 x^2} / (x^2 + c^2)
//   A7 (x^4 + a^4)^{-1/2}

/// a^{2s}
CoefficientFn coef_a1(double a);
/// a^{2s} 1F1(-s; 1; -c^2/4a^2), the continuation of a^{2m} L_m(-c^2/4a^2).
CoefficientFn coef_a2(double a, double c);
/// a^{-2s-2n-2} Gamma(s+n+1) / Gamma(n+1)
CoefficientFn coef_a3(double a, int n);
/// a^{-2s-2n-3} Gamma(s+n+3/2) / Gamma(n+3/2)
CoefficientFn coef_a4(double a, int n);
/// Two terms: c^{-2s-2} Gamma(s+1) I0(ac) and
/// -(a/2)^{2s+2} 1F2(1; s+2, s+2; a^2c^2/4) / ((s+1) Gamma(s+2)). Needs q > a.
CoefficientFn coef_a5(double a, double c);
/// c^{-2s-2} e^{y} Gamma(s+1, y), y = (ac)^2. For y <= 6 it is split into
/// c^{-2s-2} Gamma(s+1) e^y and the convergent remainder
/// -c^{-2s-2} y^{s+1} sum_p y^p / ((s+1)...(s+p+1)); above that the
/// continued fraction for e^y Gamma(s+1, y) is used as a single term.
CoefficientFn coef_a6(double a, double c);
/// Theorem 2: pi^{-1/2} a^{-4s-2} Gamma(s+1/2)
CoefficientFn coef_a7(double a);

CoefficientFn coefficient(Example ex, const ExampleParams& p);

/// "a1".."a7" (case-insensitive). Throws DomainError otherwise.
Example parse_example(const std::string& label);
std::string label(Example ex);

/// Closed-form transform value. A6 has none and throws DomainError.
double closed_form(Example ex, double q, const ExampleParams& p);

/// f(x) of the example, for direct quadrature.
std::function<double(double)> example_function(Example ex, const ExampleParams& p);

/// Point beyond which f is below 1e-18 of its size at the origin
/// (Gaussian examples), +inf otherwise.
double oracle_cutoff(Example ex, const ExampleParams& p);

/// e^{y} K0(qc) - (1/2) e^{-X} sum_p y^p Psi(p+1, 1; X), X = q^2/4a^2.
/// Stops when a term drops below 1e-14 of the running sum.
SeriesResult a6_series_psi(double q, double a, double c, int max_terms = 200);

/// e^{y} K0(qc) - (2a^2/q^2) e^{-X} sum_p (2a^2c/q)^{2p} 2F0(p+1, p+1; -4a^2/q^2)
/// with each 2F0 optimally truncated. error_bound sums the inner bounds and
/// the outer tail (using 0 < 2F0 <= 1).
SeriesResult a6_series_2f0(double q, double a, double c, int max_terms = 200);

/// (1/2) e^{y} Gamma(0, y)
double a6_q_zero(double a, double c);

/// m-th derivative at z = 0 of e^{-a^2 z} J_{2n}(c sqrt z):
/// zero for m < n, else (-1)^m m!/(m+n)! a^{2m} (-w)^n L^{(2n)}_{m-n}(-w),
/// w = c^2/4a^2.
double appendix_a_derivatives(int m, int n, double a, double c);

}  // namespace mbhankel::catalog
