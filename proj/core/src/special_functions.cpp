#include "mbhankel/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mbhankel/errors.hpp"
#include "mbhankel/quadrature.hpp"

namespace mbhankel::sf {
namespace {

constexpr double kJSeriesLimit = 8.0;
constexpr double kJMillerLimit = 25.0;
constexpr double kISeriesLimit = 30.0;
constexpr double kKSeriesLimit = 2.0;
constexpr int kMaxSeriesTerms = 100000;

void require_nonnegative(double x, const char* name) {
  if (!(x >= 0.0)) throw DomainError(std::string(name) + " requires x >= 0");
}

void require_positive(double x, const char* name) {
  if (!(x > 0.0)) throw DomainError(std::string(name) + " requires x > 0");
}

// J0 and J1 by their power series, in extended precision.
void j01_series(double xd, double& j0, double& j1) {
  const long double x = xd;
  const long double y = x * x / 4.0L;
  long double t0 = 1.0L, s0 = 1.0L;
  long double t1 = 1.0L, s1 = 1.0L;
  for (int k = 1; k < 80; ++k) {
    t0 *= -y / (static_cast<long double>(k) * k);
    t1 *= -y / (static_cast<long double>(k) * (k + 1));
    s0 += t0;
    s1 += t1;
    if (std::fabs(t0) < 1e-24L && std::fabs(t1) < 1e-24L) break;
  }
  j0 = static_cast<double>(s0);
  j1 = static_cast<double>(x / 2.0L * s1);
}

// J0 and J1 by Miller's backward recurrence, normalised with
// J0 + 2 (J2 + J4 + ...) = 1.
void j01_miller(double xd, double& j0, double& j1) {
  const long double x = xd;
  int n = static_cast<int>(xd + 30.0 + 6.0 * std::sqrt(xd));
  if (n % 2 != 0) ++n;
  long double above = 0.0L;
  long double cur = 1e-30L;
  long double norm = 0.0L;
  long double j1_raw = 0.0L;
  for (int k = n; k >= 1; --k) {
    const long double below = 2.0L * k / x * cur - above;
    above = cur;
    cur = below;  // cur now holds J_{k-1}
    if (k - 1 == 1) j1_raw = cur;
    if (k - 1 > 0 && (k - 1) % 2 == 0) norm += 2.0L * cur;
  }
  norm += cur;
  j0 = static_cast<double>(cur / norm);
  j1 = static_cast<double>(j1_raw / norm);
}

// Hankel expansion P and Q sums for order nu at large x.
void hankel_pq(double nu, double x, double& p, double& q) {
  const double mu = 4.0 * nu * nu;
  double a = 1.0;
  p = 1.0;
  q = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    a *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
    const double mag = std::abs(a);
    if (mag > prev) break;
    prev = mag;
    const int sign = ((k / 2) % 2 == 0) ? 1 : -1;
    if (k % 2 == 0) {
      p += sign * a;
    } else {
      q += sign * a;
    }
    if (mag < 1e-18) break;
  }
}

// e^{-x} sqrt(2 pi x) I_nu(x) asymptotic sum.
double scaled_i_asymptotic(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double a = 1.0;
  double sum = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    a *= -(mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
    const double mag = std::abs(a);
    if (mag > prev) break;
    prev = mag;
    sum += a;
    if (mag < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// e^x K_nu(x) = int_0^inf exp(-x (cosh t - 1)) cosh(nu t) dt by the
// trapezoidal rule, which converges geometrically for this entire integrand.
double scaled_k_integral(double nu, double x) {
  const double h = std::min(0.2, 0.5 / std::sqrt(x));
  const double t_max = std::acosh(1.0 + 48.0 / x) + 1.0;
  double sum = 0.5;
  for (int k = 1;; ++k) {
    const double t = k * h;
    const double term = std::exp(-x * (std::cosh(t) - 1.0)) * std::cosh(nu * t);
    sum += term;
    if (t > t_max) break;
  }
  return h * sum;
}

double k0_series(double x) {
  const double y = x * x / 4.0;
  double term = 1.0;
  double harmonic = 0.0;
  double sum = 0.0;
  for (int k = 1; k < 60; ++k) {
    term *= y / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    sum += term * harmonic;
    if (term * harmonic < 1e-18 * std::abs(sum)) break;
  }
  return -(std::log(x / 2.0) + kEulerGamma) * bessel_i0(x) + sum;
}

double k1_series(double x) {
  const double y = x * x / 4.0;
  // psi(k+1) + psi(k+2) = -2 gamma + H_k + H_{k+1}
  double term = 1.0;  // y^k / (k! (k+1)!)
  double hk = 0.0;
  double sum = (-2.0 * kEulerGamma + 1.0) * term;
  for (int k = 1; k < 60; ++k) {
    term *= y / (static_cast<double>(k) * (k + 1));
    hk += 1.0 / k;
    const double piece = (-2.0 * kEulerGamma + 2.0 * hk + 1.0 / (k + 1)) * term;
    sum += piece;
    if (std::abs(piece) < 1e-18 * std::abs(sum)) break;
  }
  return 1.0 / x + std::log(x / 2.0) * bessel_i1(x) - x / 4.0 * sum;
}

}  // namespace

double bessel_j0(double x) {
  require_nonnegative(x, "bessel_j0");
  double j0 = 0.0, j1 = 0.0;
  if (x < kJSeriesLimit) {
    j01_series(x, j0, j1);
    return j0;
  }
  if (x < kJMillerLimit) {
    j01_miller(x, j0, j1);
    return j0;
  }
  double p = 0.0, q = 0.0;
  hankel_pq(0.0, x, p, q);
  const double c = std::cos(x), s = std::sin(x);
  // chi = x - pi/4
  const double cos_chi = (c + s) / std::sqrt(2.0);
  const double sin_chi = (s - c) / std::sqrt(2.0);
  return std::sqrt(2.0 / (kPi * x)) * (p * cos_chi - q * sin_chi);
}

double bessel_j1(double x) {
  require_nonnegative(x, "bessel_j1");
  double j0 = 0.0, j1 = 0.0;
  if (x < kJSeriesLimit) {
    j01_series(x, j0, j1);
    return j1;
  }
  if (x < kJMillerLimit) {
    j01_miller(x, j0, j1);
    return j1;
  }
  double p = 0.0, q = 0.0;
  hankel_pq(1.0, x, p, q);
  const double c = std::cos(x), s = std::sin(x);
  // chi = x - 3 pi/4
  const double cos_chi = (s - c) / std::sqrt(2.0);
  const double sin_chi = -(s + c) / std::sqrt(2.0);
  return std::sqrt(2.0 / (kPi * x)) * (p * cos_chi - q * sin_chi);
}

double bessel_i0(double x) {
  require_nonnegative(x, "bessel_i0");
  if (x > 700.0) throw OverflowError("bessel_i0: x > 700 overflows");
  if (x <= kISeriesLimit) {
    const double y = x * x / 4.0;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 500; ++k) {
      term *= y / (static_cast<double>(k) * k);
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return sum;
  }
  return std::exp(x) / std::sqrt(2.0 * kPi * x) * scaled_i_asymptotic(0.0, x);
}

double bessel_i1(double x) {
  require_nonnegative(x, "bessel_i1");
  if (x > 700.0) throw OverflowError("bessel_i1: x > 700 overflows");
  if (x <= kISeriesLimit) {
    const double y = x * x / 4.0;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 500; ++k) {
      term *= y / (static_cast<double>(k) * (k + 1));
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return x / 2.0 * sum;
  }
  return std::exp(x) / std::sqrt(2.0 * kPi * x) * scaled_i_asymptotic(1.0, x);
}

double bessel_k0(double x) {
  require_positive(x, "bessel_k0");
  if (x <= kKSeriesLimit) return k0_series(x);
  return std::exp(-x) * scaled_k_integral(0.0, x);
}

double bessel_k1(double x) {
  require_positive(x, "bessel_k1");
  if (x <= kKSeriesLimit) return k1_series(x);
  return std::exp(-x) * scaled_k_integral(1.0, x);
}

double bessel_kn(int n, double x) {
  require_positive(x, "bessel_kn");
  if (n < 0) throw DomainError("bessel_kn requires n >= 0");
  double km = bessel_k0(x);
  if (n == 0) return km;
  double k = bessel_k1(x);
  for (int j = 1; j < n; ++j) {
    const double next = km + 2.0 * j / x * k;
    km = k;
    k = next;
  }
  return k;
}

double bessel_k_half(int n, double x) {
  require_positive(x, "bessel_k_half");
  if (n < 0) throw DomainError("bessel_k_half requires n >= 0");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= static_cast<double>(n + k + 1) * (n - k) / ((k + 1) * 2.0 * x);
    sum += term;
  }
  return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) * sum;
}

double laguerre_gen(int n, double alpha, double x) {
  if (n < 0) throw DomainError("laguerre_gen requires n >= 0");
  if (!(alpha > -1.0)) throw DomainError("laguerre_gen requires alpha > -1");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex hyp1f1_c(Complex a, double b, double z) {
  if (b <= 0.0 && b == std::round(b)) {
    throw DomainError("hyp1f1_c: b is a non-positive integer");
  }
  Complex term(1.0, 0.0);
  Complex sum(1.0, 0.0);
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    term *= (a + static_cast<double>(k)) / (b + k) * (z / (k + 1.0));
    sum += term;
    if (term == 0.0 || std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
  }
  throw ConvergenceError("hyp1f1_c: series did not converge in 1e5 terms", std::abs(term));
}

Complex hyp1f2_c(double a1, Complex b1, Complex b2, double z) {
  auto bad = [](Complex b) {
    return b.imag() == 0.0 && b.real() <= 0.0 && b.real() == std::round(b.real());
  };
  if (bad(b1) || bad(b2)) throw DomainError("hyp1f2_c: lower parameter is a non-positive integer");
  Complex term(1.0, 0.0);
  Complex sum(1.0, 0.0);
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    term *= (a1 + k) / ((b1 + static_cast<double>(k)) * (b2 + static_cast<double>(k))) *
            (z / (k + 1.0));
    sum += term;
    if (term == 0.0 || std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
  }
  throw ConvergenceError("hyp1f2_c: series did not converge in 1e5 terms", std::abs(term));
}

AsymptoticValue hyp2f0_asymptotic(double a1, double a2, double z) {
  if (z > 0.0) throw DomainError("hyp2f0_asymptotic requires z <= 0");
  if (z == 0.0) return {1.0, 0.0, 1};
  double sum = 0.0;
  double term = 1.0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const double next = term * (a1 + k) * (a2 + k) * z / (k + 1.0);
    if (std::abs(next) >= std::abs(term) && term != 0.0) {
      // term is the smallest: stop before it
      if (k == 0) {
        throw ConvergenceError("hyp2f0_asymptotic: divergent from the first term (|z| too large)",
                               std::abs(term));
      }
      return {sum, std::abs(term), k};
    }
    sum += term;
    if (next == 0.0 || std::abs(next) < 1e-17 * std::abs(sum)) {
      return {sum, std::abs(next), k + 1};
    }
    term = next;
  }
  throw ConvergenceError("hyp2f0_asymptotic: no minimal term found", std::abs(term));
}

double tricomi_psi(int a, double x) {
  if (a < 1) throw DomainError("tricomi_psi requires integer a >= 1");
  require_positive(x, "tricomi_psi");
  const double ad = a;
  auto softplus = [](double u) { return u > 30.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u)); };
  auto integrand = [&](double u) {
    return std::exp(-x * std::exp(u) + ad * (u - softplus(u)));
  };
  const double u_peak = std::min(0.0, std::log(ad / x));
  const double u_lo = u_peak - 45.0 / ad;
  const double u_hi = std::log((50.0 + ad * (1.0 + std::abs(u_peak))) / x) + 1.0;
  const auto r = quad::integrate_adaptive(integrand, u_lo, u_hi, {0.0, 1e-14, 4000});
  double gamma_a = 1.0;
  for (int j = 2; j < a; ++j) gamma_a *= j;
  return r.value / gamma_a;
}

double exp_incomplete_gamma_upper0(double x) {
  require_positive(x, "incomplete_gamma_upper0");
  if (x < 1.0) {
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
      term *= -x / k;
      sum -= term / k;  // (-1)^{k+1} x^k / (k k!)
      if (std::abs(term) < 1e-18) break;
    }
    return std::exp(x) * (-kEulerGamma - std::log(x) + sum);
  }
  // modified Lentz on E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return h;
  }
  throw ConvergenceError("incomplete_gamma_upper0: continued fraction did not converge");
}

double incomplete_gamma_upper0(double x) {
  require_positive(x, "incomplete_gamma_upper0");
  if (x < 1.0) {
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
      term *= -x / k;
      sum -= term / k;
      if (std::abs(term) < 1e-18) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  return std::exp(-x) * exp_incomplete_gamma_upper0(x);
}

Complex exp_upper_gamma_cf(Complex a, double y) {
  require_positive(y, "exp_upper_gamma_cf");
  constexpr double tiny = 1e-300;
  Complex b = y + 1.0 - a;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i < 20000; ++i) {
    const Complex an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const Complex del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return std::exp(a * std::log(y)) * h;
  }
  throw ConvergenceError("exp_upper_gamma_cf: continued fraction did not converge");
}

double bessel_j0_zeros(int k) {
  if (k < 1) throw DomainError("bessel_j0_zeros requires k >= 1");
  const double beta = (k - 0.25) * kPi;
  const double b2 = 1.0 / (beta * beta);
  double x = beta + (1.0 / (8.0 * beta)) *
                        (1.0 - b2 * (31.0 / 48.0 - b2 * (3779.0 / 1920.0 - b2 * (6277237.0 / 430080.0))));
  for (int it = 0; it < 6; ++it) {
    const double step = bessel_j0(x) / bessel_j1(x);
    x += step;
    if (std::abs(step) < 1e-15 * x) break;
  }
  return x;
}

}  // namespace mbhankel::sf
