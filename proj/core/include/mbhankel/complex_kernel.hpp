#pragma once

#include <complex>

namespace mbhankel {

// Universal value type for contour work.
using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kLnSqrt2Pi = 0.918938533204672741780329736405617639;

// Distance from a non-positive integer below which Gamma arguments are
// rejected as pole hits.
inline constexpr double kPoleProximity = 1e-12;

/// Principal-branch log Gamma.
///
/// For Re s >= 1/2 this is the logarithmic form of a 15-term Lanczos sum
/// (g = 607/128), which is continuous along every vertical line. For
/// Re s < 1/2 the reflection formula is applied with log sin(pi s) written
/// so that it is continuous in each open half-plane Im s > 0 and Im s < 0.
///
/// Throws PoleError within kPoleProximity of 0, -1, -2, ...
Complex log_gamma_c(Complex s);

/// Gamma(s). Throws PoleError near poles and OverflowError when |Gamma(s)|
/// exceeds the double range. Real arguments return an exactly real value.
Complex gamma_c(Complex s);

/// 1/Gamma(s), entire: returns exact zero at the poles of Gamma.
Complex rgamma_c(Complex s);

/// Digamma for real x > 0 (upward recurrence to x >= 10, then the
/// Bernoulli asymptotic series). Throws DomainError for x <= 0.
double digamma_r(double x);

}  // namespace mbhankel
