#pragma once

#include "mbhankel/complex_kernel.hpp"

namespace mbhankel::sf {

/// Value of a divergent asymptotic series summed to its smallest term.
struct AsymptoticValue {
  double value = 0.0;
  double error_bound = 0.0;  // magnitude of the first omitted term
  int terms_used = 0;        // number of terms summed (the truncation index)
};

// Bessel J0 / J1: power series below x = 8, Miller backward recurrence on
// [8, 25), Hankel asymptotic expansion above. Throw DomainError for x < 0.
double bessel_j0(double x);
double bessel_j1(double x);

// Modified Bessel I0 / I1 for 0 <= x <= 700 (series, then asymptotic
// expansion above x = 30). Throw OverflowError beyond 700.
double bessel_i0(double x);
double bessel_i1(double x);

// Macdonald K0 / K1 for x > 0: logarithmic series for x <= 2, trapezoidal
// quadrature of the cosh integral representation above.
double bessel_k0(double x);
double bessel_k1(double x);

/// K_n by forward recurrence from K0 and K1.
double bessel_kn(int n, double x);

/// K_{n+1/2}(x) = sqrt(pi/2x) e^{-x} sum_{k<=n} (n+k)! / (k! (n-k)! (2x)^k).
double bessel_k_half(int n, double x);

/// Generalized Laguerre polynomial L_n^alpha(x), three-term recurrence.
double laguerre_gen(int n, double alpha, double x);

/// Kummer 1F1(a; b; z) for complex a, real b and real z. Taylor series with
/// term-ratio stopping; ConvergenceError beyond 1e5 terms.
Complex hyp1f1_c(Complex a, double b, double z);

/// 1F2(a1; b1, b2; z) with complex lower parameters.
Complex hyp1f2_c(double a1, Complex b1, Complex b2, double z);

/// 2F0(a1, a2; z), z <= 0, as an asymptotic series with optimal truncation.
/// Throws ConvergenceError when the series diverges from its first term.
AsymptoticValue hyp2f0_asymptotic(double a1, double a2, double z);

/// Tricomi Psi(a, 1; x) = U(a, 1, x) for integer a >= 1 and x > 0, from
///   (1/Gamma(a)) int_0^inf e^{-xt} t^{a-1} (1+t)^{-a} dt
/// after the substitution t = e^u.
double tricomi_psi(int a, double x);

/// Gamma(0, x) = E1(x) for x > 0.
double incomplete_gamma_upper0(double x);

/// e^x Gamma(0, x), finite for all x > 0.
double exp_incomplete_gamma_upper0(double x);

/// e^y Gamma(a, y) for complex a and real y > 0, by the Legendre continued
/// fraction. Throws ConvergenceError if it has not settled in 20000 steps.
Complex exp_upper_gamma_cf(Complex a, double y);

/// k-th positive zero of J0 (McMahon start, Newton polish).
double bessel_j0_zeros(int k);

}  // namespace mbhankel::sf
