#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mbhankel/coefficient_catalog.hpp"
#include "mbhankel/complex_kernel.hpp"
#include "mbhankel/mellin_barnes.hpp"
#include "mbhankel/special_functions.hpp"

using namespace mbhankel;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

Complex random_point(double vlo, double vhi, double wmax) {
  std::uniform_real_distribution<double> v(vlo, vhi), w(-wmax, wmax);
  return {v(rng()), w(rng())};
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Properties, GammaSchwarzReflection) {
  for (int i = 0; i < 1000; ++i) {
    const Complex s = random_point(-20.0, 60.0, 80.0);
    if (std::abs(s.imag()) < 1e-3) continue;
    EXPECT_LT(rel(gamma_c(std::conj(s)), std::conj(gamma_c(s))), 1e-14) << s;
  }
}

TEST(Properties, GammaRecurrence) {
  for (int i = 0; i < 1000; ++i) {
    const Complex s = random_point(-15.0, 40.0, 30.0);
    if (std::abs(s.imag()) < 0.05) continue;
    EXPECT_LT(rel(gamma_c(s + 1.0), s * gamma_c(s)), 1e-12) << s;
  }
}

TEST(Properties, GammaReflection) {
  for (int i = 0; i < 1000; ++i) {
    const Complex s = random_point(-5.0, 5.0, 10.0);
    if (std::abs(s.imag()) < 0.05) continue;
    const Complex lhs = gamma_c(s) * gamma_c(1.0 - s);
    const Complex rhs = kPi / std::sin(kPi * s);
    EXPECT_LT(rel(lhs, rhs), 1e-12) << s;
  }
}

TEST(Properties, GammaDuplication) {
  for (int i = 0; i < 500; ++i) {
    const Complex s = random_point(-0.4, 20.0, 30.0);
    const Complex lhs = gamma_c(2.0 * s + 1.0);
    const Complex rhs = std::pow(2.0, 2.0 * s) * gamma_c(s + 0.5) * gamma_c(s + 1.0) / std::sqrt(kPi);
    EXPECT_LT(rel(lhs, rhs), 1e-12) << s;
  }
}

TEST(Properties, GammaDecayOnVerticalLines) {
  // |Gamma(v + i w)| ~ sqrt(2 pi) |w|^{v - 1/2} e^{-pi |w| / 2}
  std::uniform_real_distribution<double> v(-0.9, 3.0), w(200.0, 600.0);
  for (int i = 0; i < 300; ++i) {
    const double vv = v(rng()), ww = w(rng());
    const double lhs = log_gamma_c({vv, ww}).real();
    const double rhs = kLnSqrt2Pi + (vv - 0.5) * std::log(ww) - kPi * ww / 2.0;
    EXPECT_NEAR(lhs, rhs, 0.02) << vv << " " << ww;
  }
}

TEST(Properties, ReciprocalGammaIsEntire) {
  for (int i = 0; i < 500; ++i) {
    const Complex s = random_point(-30.0, 30.0, 20.0);
    const Complex r = rgamma_c(s);
    EXPECT_TRUE(std::isfinite(r.real()) && std::isfinite(r.imag()));
    if (std::abs(s.imag()) > 0.1) EXPECT_LT(std::abs(r * gamma_c(s) - 1.0), 1e-12);
  }
}

TEST(Properties, CatalogConjugateSymmetry) {
  std::uniform_real_distribution<double> par(0.3, 2.5);
  for (int i = 0; i < 200; ++i) {
    const int e = i % 7;
    const catalog::ExampleParams p{par(rng()), par(rng()), i % 3};
    const auto coef = catalog::coefficient(static_cast<catalog::Example>(e), p);
    const Complex s = random_point(coef.strip_min + 0.1, 4.0, 15.0);
    const Complex v = coef.evaluate(s);
    EXPECT_LE(std::abs(coef.evaluate(std::conj(s)) - std::conj(v)), 1e-12 * std::abs(v) + 1e-300) << e << " " << s;
  }
}

TEST(Properties, ModifiedBesselWronskian) {
  std::uniform_real_distribution<double> x(0.05, 300.0);
  for (int i = 0; i < 500; ++i) {
    const double xx = x(rng());
    const double w = sf::bessel_i0(xx) * sf::bessel_k1(xx) + sf::bessel_i1(xx) * sf::bessel_k0(xx);
    EXPECT_NEAR(w * xx, 1.0, 1e-11) << xx;
  }
}

TEST(Properties, BesselJRecurrenceViaDerivative) {
  // J0' = -J1, checked by a centred difference
  std::uniform_real_distribution<double> x(0.5, 80.0);
  for (int i = 0; i < 300; ++i) {
    const double xx = x(rng()), h = 1e-5;
    const double d = (sf::bessel_j0(xx + h) - sf::bessel_j0(xx - h)) / (2.0 * h);
    EXPECT_NEAR(d, -sf::bessel_j1(xx), 1e-8) << xx;
  }
}

TEST(Properties, GaussianTransformScaling) {
  // A_a(q) = A_1(q/a) / a^2
  std::uniform_real_distribution<double> a(0.5, 2.0), q(0.2, 6.0);
  for (int i = 0; i < 8; ++i) {
    const double aa = a(rng()), qq = q(rng());
    const double lhs = mb::theorem1_transform(catalog::coef_a1(aa), qq, 1e-11).value;
    const double rhs = mb::theorem1_transform(catalog::coef_a1(1.0), qq / aa, 1e-11).value / (aa * aa);
    EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(std::abs(rhs), 1e-6)) << aa << " " << qq;
  }
}

TEST(Properties, TransformLinearity) {
  const auto g1 = catalog::coef_a3(1.0, 0);
  const auto g2 = catalog::coef_a1(0.8);
  CoefficientFn sum;
  sum.terms = {g1.terms[0], g2.terms[0]};
  sum.strip_min = -1.0;
  for (double q : {0.7, 2.3}) {
    const double s = mb::theorem1_transform(sum, q, 1e-11).value;
    const double parts = mb::theorem1_transform(g1, q, 1e-11).value + mb::theorem1_transform(g2, q, 1e-11).value;
    EXPECT_NEAR(s, parts, 1e-10 * std::abs(parts));
  }
}
