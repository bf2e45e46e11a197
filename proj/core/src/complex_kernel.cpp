#include "mbhankel/complex_kernel.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "mbhankel/errors.hpp"

namespace mbhankel {
namespace {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficient set).
constexpr double kLanczosShift = 5.24218750000000000;  // g + 1/2
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczosCoef = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
    0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5};
constexpr double kSqrt2Pi = 2.5066282746310005;
constexpr double kLogMax = 709.782712893384;

void check_pole(Complex s) {
  if (s.real() > 0.5) return;
  const double k = std::round(s.real());
  if (k <= 0.0 && std::abs(s - Complex(k, 0.0)) < kPoleProximity) {
    std::ostringstream os;
    os << "Gamma pole: argument (" << s.real() << ", " << s.imag()
       << ") is within 1e-12 of " << k;
    throw PoleError(os.str());
  }
}

using LComplex = std::complex<long double>;

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// Lanczos log Gamma, valid for Re z >= 1/2. The long double instance lets
// exp() of a large log Gamma keep its relative accuracy.
template <typename T>
std::complex<T> log_gamma_right(std::complex<T> z) {
  std::complex<T> ser(static_cast<T>(kLanczosC0), T(0));
  std::complex<T> y = z;
  for (double c : kLanczosCoef) {
    y += T(1);
    ser += static_cast<T>(c) / y;
  }
  const std::complex<T> t = z + static_cast<T>(kLanczosShift);
  return (z + T(0.5)) * std::log(t) - t + std::log(static_cast<T>(kSqrt2Pi) * ser) - std::log(z);
}

// log sin(pi s), continuous in the closed upper half-plane (principal on the
// real axis between integers) and mirrored into the lower one.
template <typename T>
std::complex<T> log_sin_pi(std::complex<T> s) {
  if (s.imag() < T(0)) return std::conj(log_sin_pi(std::conj(s)));
  const T pi = static_cast<T>(kPiL);
  const std::complex<T> i(T(0), T(1));
  const std::complex<T> u = std::exp(T(2) * pi * i * s);
  return -i * pi * s + std::log(T(1) - u) - std::log(T(2)) + i * (pi / T(2));
}

template <typename T>
std::complex<T> log_gamma_any(Complex s) {
  const std::complex<T> z(s.real(), s.imag());
  if (s.real() >= 0.5) return log_gamma_right(z);
  return std::log(static_cast<T>(kPiL)) - log_sin_pi(z) - log_gamma_right(T(1) - z);
}

Complex to_double(LComplex z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

double sin_pi(double x) {
  const double r = x - 2.0 * std::round(x / 2.0);  // r in [-1, 1]
  return std::sin(kPi * r);
}

double log_gamma_real_positive(double x) {
  return log_gamma_right(Complex(x, 0.0)).real();
}

double gamma_real(double x) {
  if (x >= 0.5) {
    const double lg = log_gamma_real_positive(x);
    if (lg > kLogMax) throw OverflowError("Gamma overflow");
    return std::exp(lg);
  }
  const double lg = log_gamma_real_positive(1.0 - x);
  const double sp = sin_pi(x);
  // |Gamma(x)| = pi / (|sin(pi x)| Gamma(1-x))
  const double log_mag = std::log(kPi) - std::log(std::abs(sp)) - lg;
  if (log_mag > kLogMax) throw OverflowError("Gamma overflow");
  const double mag = std::exp(log_mag);
  return sp > 0.0 ? mag : -mag;
}

}  // namespace

Complex log_gamma_c(Complex s) {
  check_pole(s);
  return log_gamma_any<double>(s);
}

Complex gamma_c(Complex s) {
  check_pole(s);
  if (s.imag() == 0.0) return {gamma_real(s.real()), 0.0};
  const LComplex lg = log_gamma_any<long double>(s);
  if (lg.real() > kLogMax) throw OverflowError("Gamma overflow");
  return to_double(std::exp(lg));
}

Complex rgamma_c(Complex s) {
  if (s.real() <= 0.5) {
    const double k = std::round(s.real());
    if (k <= 0.0 && std::abs(s - Complex(k, 0.0)) < kPoleProximity) {
      // 1/Gamma(s) = (-1)^n n! (s + n) + O((s + n)^2) near s = -n
      const double n = -k;
      double fact = 1.0;
      for (int j = 2; j <= static_cast<int>(n); ++j) fact *= j;
      const double sign = (static_cast<long long>(n) % 2 == 0) ? 1.0 : -1.0;
      return sign * fact * (s - Complex(k, 0.0));
    }
  }
  if (s.imag() == 0.0) {
    const double x = s.real();
    if (x >= 0.5) return {std::exp(-log_gamma_real_positive(x)), 0.0};
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    const double lg = log_gamma_real_positive(1.0 - x);
    if (lg > kLogMax) throw OverflowError("1/Gamma overflow");
    return {sin_pi(x) * std::exp(lg) / kPi, 0.0};
  }
  const LComplex lg = -log_gamma_any<long double>(s);
  if (lg.real() > kLogMax) throw OverflowError("1/Gamma overflow");
  return to_double(std::exp(lg));
}

double digamma_r(double x) {
  if (!(x > 0.0)) throw DomainError("digamma_r requires x > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  // Bernoulli tail: B_2k / (2k x^2k), k = 1..7
  const double tail =
      r * (1.0 / 12 -
           r * (1.0 / 120 -
                r * (1.0 / 252 -
                     r * (1.0 / 240 -
                          r * (1.0 / 132 - r * (691.0 / 32760 - r * (1.0 / 12)))))));
  return acc + std::log(x) - 0.5 / x - tail;
}

}  // namespace mbhankel
