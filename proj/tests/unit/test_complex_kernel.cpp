#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "mbhankel/complex_kernel.hpp"
#include "mbhankel/errors.hpp"
#include "mbhankel/special_functions.hpp"

using namespace mbhankel;

namespace {

using LComplex = std::complex<long double>;

// Reference log Gamma: shift to Re z >= 30, then Stirling with eight
// Bernoulli corrections, all in long double. Valid for Re z > 0.
LComplex ref_log_gamma(LComplex z) {
  LComplex shift = 0.0L;
  while (z.real() < 30.0L) {
    shift += std::log(z);
    z += 1.0L;
  }
  static const long double b[] = {1.0L / 12, -1.0L / 360, 1.0L / 1260, -1.0L / 1680,
                                  1.0L / 1188, -691.0L / 360360, 1.0L / 156, -3617.0L / 122400};
  LComplex zi = 1.0L / z;
  const LComplex z2 = zi * zi;
  LComplex corr = 0.0L;
  for (long double c : b) {
    corr += c * zi;
    zi *= z2;
  }
  return (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2.0L * 3.14159265358979323846264338327950288L) + corr -
         shift;
}

Complex ref_gamma(Complex s) {
  const LComplex v = std::exp(ref_log_gamma(LComplex(s.real(), s.imag())));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(GammaC, ElementaryValues) {
  EXPECT_NEAR(std::abs(gamma_c({1.0, 0.0}) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(gamma_c({0.5, 0.0}).real(), std::sqrt(kPi), 1e-15);
  EXPECT_NEAR(gamma_c({-0.5, 0.0}).real(), -2.0 * std::sqrt(kPi), 1e-14);
  EXPECT_EQ(gamma_c({0.5, 0.0}).imag(), 0.0);
}

TEST(GammaC, HalfLineModulus) {
  const Complex g = gamma_c({0.5, 10.0});
  const double expected = kPi / std::cosh(10.0 * kPi);
  EXPECT_NEAR(std::norm(g) / expected, 1.0, 1e-12);
}

TEST(GammaC, AgreesWithStirlingReferenceOnGrid) {
  double worst = 0.0;
  for (double re = 0.5; re <= 60.0; re += 3.7) {
    for (double im = -200.0; im <= 200.0; im += 13.3) {
      // keep |Gamma| representable
      const Complex s(re, im);
      const double lg = log_gamma_c(s).real();
      if (lg > 700.0 || lg < -700.0) continue;
      worst = std::max(worst, rel(gamma_c(s), ref_gamma(s)));
    }
  }
  EXPECT_LT(worst, 1e-13);
}

TEST(GammaC, ReflectedHalfPlaneMatchesReference) {
  // Gamma(s) = pi / (sin(pi s) Gamma(1 - s)) with the reference on the right
  double worst = 0.0;
  for (double re = -59.7; re < 0.5; re += 4.1) {
    for (double im = -30.0; im <= 30.0; im += 7.7) {
      const Complex s(re, im);
      const double lg = log_gamma_c(s).real();
      if (lg > 700.0 || lg < -700.0) continue;
      const Complex expected = kPi / (std::sin(kPi * s) * ref_gamma(1.0 - s));
      worst = std::max(worst, rel(gamma_c(s), expected));
    }
  }
  EXPECT_LT(worst, 1e-11);
}

TEST(GammaC, PoleProximityIsTyped) {
  EXPECT_THROW(gamma_c({0.0, 0.0}), PoleError);
  EXPECT_THROW(gamma_c({-3.0, 1e-13}), PoleError);
  EXPECT_THROW(log_gamma_c({-7.0, 0.0}), PoleError);
  EXPECT_NO_THROW(gamma_c({-3.0, 1e-6}));
}

TEST(GammaC, OverflowIsTyped) {
  EXPECT_THROW(gamma_c({180.0, 0.0}), OverflowError);
}

TEST(LogGammaC, ElementaryValues) {
  EXPECT_NEAR(std::abs(log_gamma_c({1.0, 0.0})), 0.0, 1e-15);
  EXPECT_NEAR(log_gamma_c({10.0, 0.0}).real(), std::log(362880.0), 1e-13);
}

TEST(LogGammaC, ImaginaryPartIsContinuousAlongVerticalLine) {
  // reference: cumulative argument of Gamma tracked in small steps
  double tracked = log_gamma_c({2.0, 0.0}).imag();
  Complex prev = gamma_c({2.0, 0.0});
  for (int k = 1; k <= 3000; ++k) {
    const Complex s(2.0, 0.01 * k);
    const Complex g = gamma_c(s);
    tracked += std::arg(g / prev);
    prev = g;
    const double lg = log_gamma_c(s).imag();
    ASSERT_NEAR(lg, tracked, 1e-9) << "at Im s = " << s.imag();
  }
  // at Im s = 30 the principal argument of Gamma has wrapped many times
  EXPECT_GT(std::abs(tracked - std::arg(prev)), 6.0);
}

TEST(LogGammaC, ExpMatchesGamma) {
  for (double re : {0.7, 3.0, 12.5, -2.3, -7.6}) {
    for (double im : {-40.0, -1.0, 0.3, 25.0}) {
      const Complex s(re, im);
      EXPECT_LT(rel(std::exp(log_gamma_c(s)), gamma_c(s)), 1e-12) << s;
    }
  }
}

TEST(RgammaC, ZerosAndLinearisationAtPoles) {
  EXPECT_EQ(std::abs(rgamma_c({0.0, 0.0})), 0.0);
  EXPECT_EQ(std::abs(rgamma_c({-4.0, 0.0})), 0.0);
  // near -n, 1/Gamma(s) ~ (-1)^n n! (s + n)
  const Complex near(-2.0 + 1e-14, 0.0);
  const double delta = near.real() + 2.0;  // exact offset after rounding
  EXPECT_NEAR(rgamma_c(near).real(), 2.0 * delta, 1e-26);
  EXPECT_LT(rel(rgamma_c({2.5, 3.0}), 1.0 / gamma_c({2.5, 3.0})), 1e-14);
}

TEST(DigammaR, KnownValues) {
  EXPECT_NEAR(digamma_r(1.0), -kEulerGamma, 1e-15);
  EXPECT_NEAR(digamma_r(2.0), 1.0 - kEulerGamma, 1e-15);
  EXPECT_NEAR(digamma_r(0.5), -kEulerGamma - 2.0 * std::log(2.0), 1e-14);
  EXPECT_THROW(digamma_r(0.0), DomainError);
  EXPECT_THROW(digamma_r(-1.5), DomainError);
}

TEST(DigammaR, RecurrenceOverRange) {
  for (double x = 0.05; x < 50.0; x *= 1.37) {
    EXPECT_NEAR(digamma_r(x + 1.0) - digamma_r(x), 1.0 / x, 1e-12 * (1.0 / x + std::abs(digamma_r(x))));
  }
}

TEST(DigammaR, ExponentialGeneratingSum) {
  // sum_p psi(p+1) x^p / p! at x = 1 equals e (ln x + Gamma(0, x)) = e Gamma(0, 1)
  double sum = 0.0;
  double fact = 1.0;
  for (int p = 0; p <= 40; ++p) {
    if (p > 0) fact *= p;
    sum += digamma_r(p + 1.0) / fact;
  }
  const double expected = std::exp(1.0) * sf::incomplete_gamma_upper0(1.0);
  EXPECT_NEAR(sum, expected, 1e-12);
  EXPECT_NEAR(expected, 0.5963473623231940, 1e-12);
}
