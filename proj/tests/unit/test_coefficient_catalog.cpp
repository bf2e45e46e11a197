#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "mbhankel/coefficient_catalog.hpp"
#include "mbhankel/complex_kernel.hpp"
#include "mbhankel/errors.hpp"
#include "mbhankel/mellin_barnes.hpp"
#include "mbhankel/quadrature.hpp"
#include "mbhankel/quadrature_oracle.hpp"
#include "mbhankel/special_functions.hpp"

using namespace mbhankel;
using catalog::Example;
using catalog::ExampleParams;

namespace {

using ComplexFn = std::function<Complex(Complex)>;

// (-1)^m g^(m)(0) by the trapezoidal rule on |z| = r (Cauchy integral).
double taylor_bar(const ComplexFn& g, int m, double r, int nodes = 64) {
  Complex sum(0.0, 0.0);
  for (int j = 0; j < nodes; ++j) {
    const double th = 2.0 * kPi * j / nodes;
    sum += g(std::polar(r, th)) * std::polar(1.0, -m * th);
  }
  const double coeff = sum.real() / (nodes * std::pow(r, m));
  return (m % 2 ? -1.0 : 1.0) * std::tgamma(m + 1.0) * coeff;
}

// J0(sqrt(u)) as an entire function of u.
Complex j0_sqrt(Complex u) {
  Complex term(1.0, 0.0), sum(1.0, 0.0);
  for (int k = 1; k < 80; ++k) {
    term *= -u / (4.0 * k * k);
    sum += term;
  }
  return sum;
}

struct TaylorCase {
  Example ex;
  ExampleParams p;
  ComplexFn g;
  double radius;
};

std::vector<TaylorCase> taylor_cases() {
  std::vector<TaylorCase> cases;
  for (double a : {0.7, 1.0, 1.6}) {
    for (double c : {0.5, 1.0, 2.0}) {
      cases.push_back({Example::A1, {a, c, 0}, [a](Complex y) { return std::exp(-a * a * y); }, 1.0});
      cases.push_back({Example::A2, {a, c, 0}, [a, c](Complex y) { return std::exp(-a * a * y) * j0_sqrt(c * c * y); }, 1.0});
      cases.push_back({Example::A5, {a, c, 0}, [a, c](Complex y) { return j0_sqrt(a * a * y) / (y + c * c); }, c * c / 2});
      cases.push_back({Example::A6, {a, c, 0}, [a, c](Complex y) { return std::exp(-a * a * y) / (y + c * c); }, c * c / 2});
    }
    for (int n : {0, 1, 3}) {
      cases.push_back({Example::A3, {a, 1.0, n}, [a, n](Complex y) { return std::pow(y + a * a, -n - 1.0); }, a * a / 2});
      cases.push_back({Example::A4, {a, 1.0, n}, [a, n](Complex y) { return std::pow(y + a * a, -n - 1.5); }, a * a / 2});
    }
    cases.push_back({Example::A7, {a, 1.0, 0}, [a](Complex y) { return std::pow(y + a * a * a * a, -0.5); }, a * a * a * a / 2});
  }
  return cases;
}

}  // namespace

TEST(Catalog, IntegerPointsMatchTaylorCoefficients) {
  for (const auto& tc : taylor_cases()) {
    const auto coef = catalog::coefficient(tc.ex, tc.p);
    for (int m = 0; m <= 8; ++m) {
      const double expected = taylor_bar(tc.g, m, tc.radius);
      const double got = coef.evaluate(Complex(m, 0.0)).real();
      EXPECT_NEAR(got, expected, 1e-8 * std::abs(expected))
          << catalog::label(tc.ex) << " a=" << tc.p.a << " c=" << tc.p.c << " n=" << tc.p.n << " m=" << m;
    }
  }
}

TEST(Catalog, SimpleValues) {
  EXPECT_NEAR(catalog::coef_a1(2.0).evaluate(3.0).real(), 64.0, 1e-12);
  EXPECT_NEAR(std::abs(catalog::coef_a1(1.0).evaluate({0.5, 1.0}) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(catalog::coef_a3(1.0, 1).evaluate(2.0).real(), 6.0, 1e-13);
  EXPECT_NEAR(catalog::coef_a4(1.0, 0).evaluate(1.0).real(), 1.5, 1e-14);
  EXPECT_NEAR(catalog::coef_a7(1.0).evaluate(0.0).real(), 1.0, 1e-14);
  EXPECT_NEAR(catalog::coef_a7(1.0).evaluate(1.0).real(), 0.5, 1e-14);
  EXPECT_NEAR(catalog::coef_a6(1.0, 2.0).evaluate(0.0).real(), 0.25, 1e-14);
  EXPECT_NEAR(catalog::coef_a5(1e-6, 2.0).evaluate(0.0).real(), 0.25, 1e-10);
  EXPECT_EQ(catalog::coef_a7(1.0).kind, TheoremKind::theorem2);
  EXPECT_EQ(catalog::coef_a7(1.0).strip_min, -0.5);
}

TEST(Catalog, A2LaguerrePositivity) {
  const auto coef = catalog::coef_a2(1.3, 0.9);
  const double w = 0.81 / (4.0 * 1.69);
  for (int m = 0; m <= 10; ++m) {
    const double v = coef.evaluate(Complex(m, 0.0)).real();
    EXPECT_GT(v, 0.0);
    EXPECT_NEAR(v, std::pow(1.69, m) * sf::laguerre_gen(m, 0.0, -w), 1e-12 * v);
  }
}

TEST(Catalog, FiniteSumForms) {
  for (double a : {0.5, 1.0, 2.0}) {
    const double c = 1.0;
    const auto a5 = catalog::coef_a5(a, c);
    const auto a6 = catalog::coef_a6(a, c);
    double fact = 1.0;
    for (int m = 0; m <= 10; ++m) {
      if (m > 0) fact *= m;
      double s5 = 0.0, s6 = 0.0, fk = 1.0;
      for (int k = 0; k <= m; ++k) {
        if (k > 0) fk *= k;
        s5 += std::pow(a * c / 2.0, 2 * k) / (fk * fk);
        s6 += std::pow(a * c, 2 * k) / fk;
      }
      const double scale = std::pow(c, -2.0 * m - 2.0) * fact;
      if (m <= 8) EXPECT_NEAR(a5.evaluate(Complex(m, 0.0)).real(), scale * s5, 1e-10 * scale * s5) << a << " " << m;
      EXPECT_NEAR(a6.evaluate(Complex(m, 0.0)).real(), scale * s6, 1e-10 * scale * s6) << a << " " << m;
    }
  }
}

TEST(Catalog, A6SmallParameterLimit) {
  const auto a6 = catalog::coef_a6(1e-9, 1.5);
  const auto a3 = catalog::coef_a3(1.5, 0);
  for (Complex s : {Complex(0.3, 0.0), Complex(-0.4, 2.0), Complex(2.0, -5.0)}) {
    EXPECT_LT(std::abs(a6.evaluate(s) - a3.evaluate(s)), 1e-8 * std::abs(a3.evaluate(s)));
  }
}

TEST(Catalog, A6BranchesAgreeAcrossSplit) {
  // y = (ac)^2 just either side of the switch between term layouts
  const Complex s(0.7, 3.0);
  const auto lo = catalog::coef_a6(std::sqrt(6.0) - 1e-9, 1.0).evaluate(s);
  const auto hi = catalog::coef_a6(std::sqrt(6.0) + 1e-9, 1.0).evaluate(s);
  EXPECT_LT(std::abs(lo - hi), 1e-7 * std::abs(lo));
}

TEST(Catalog, ConjugateSymmetry) {
  for (int e = 0; e < 7; ++e) {
    const auto coef = catalog::coefficient(static_cast<Example>(e), {1.2, 0.8, 1});
    ASSERT_TRUE(coef.real_symmetric);
    for (double v : {-0.3, 0.4, 2.5}) {
      for (double w : {0.5, 3.0, 11.0}) {
        const Complex s(v, w);
        const Complex lhs = coef.evaluate(std::conj(s));
        const Complex rhs = std::conj(coef.evaluate(s));
        EXPECT_LE(std::abs(lhs - rhs), 1e-13 * std::abs(rhs) + 1e-300) << e;
      }
    }
  }
}

TEST(Catalog, ClosedFormValues) {
  EXPECT_NEAR(catalog::closed_form(Example::A1, 0.0, {1.0, 1.0, 0}), 0.5, 1e-15);
  EXPECT_NEAR(catalog::closed_form(Example::A3, 1.0, {1.0, 1.0, 0}), sf::bessel_k0(1.0), 1e-15);
  EXPECT_NEAR(catalog::closed_form(Example::A5, 2.0, {1.0, 1.0, 0}), sf::bessel_i0(1.0) * sf::bessel_k0(2.0), 1e-15);
  EXPECT_THROW(catalog::closed_form(Example::A5, 0.5, {1.0, 1.0, 0}), DomainError);
  EXPECT_THROW(catalog::closed_form(Example::A6, 1.0, {1.0, 1.0, 0}), DomainError);
  EXPECT_THROW(catalog::closed_form(Example::A1, 1.0, {-1.0, 1.0, 0}), DomainError);
}

TEST(Catalog, ClosedFormsMatchOscillatoryQuadrature) {
  for (int e = 0; e < 7; ++e) {
    const auto ex = static_cast<Example>(e);
    if (ex == Example::A6) continue;
    const ExampleParams p{1.0, 1.0, 1};
    for (double q : {1.5, 4.0}) {
      oracle::HankelOptions opt;
      opt.cutoff = catalog::oracle_cutoff(ex, p);
      const double ref = oracle::hankel0_direct(catalog::example_function(ex, p), q, 1e-10, opt).value;
      EXPECT_NEAR(catalog::closed_form(ex, q, p), ref, 1e-8 * std::max(std::abs(ref), 1e-3)) << e << " " << q;
    }
  }
}

TEST(Catalog, LabelsRoundTrip) {
  for (int e = 0; e < 7; ++e) {
    const auto ex = static_cast<Example>(e);
    EXPECT_EQ(catalog::parse_example(catalog::label(ex)), ex);
  }
  EXPECT_EQ(catalog::parse_example("A4"), Example::A4);
  EXPECT_THROW(catalog::parse_example("a8"), DomainError);
  EXPECT_THROW(catalog::parse_example(""), DomainError);
  EXPECT_TRUE(std::isinf(catalog::oracle_cutoff(Example::A3, {})));
}

TEST(A6Series, SmallParameterGivesMacdonald) {
  const auto r = catalog::a6_series_psi(2.0, 1e-4, 1.0);
  EXPECT_NEAR(r.value, sf::bessel_k0(2.0), 1e-6);
}

TEST(A6Series, RepresentationsAgree) {
  const auto psi = catalog::a6_series_psi(5.0, 0.5, 0.5);
  const auto f20 = catalog::a6_series_2f0(5.0, 0.5, 0.5);
  EXPECT_LE(std::abs(psi.value - f20.value), psi.error_bound + f20.error_bound + 1e-14);
  EXPECT_LE(psi.truncation_index + 1, static_cast<int>(psi.partial_sums.size()));
}

TEST(A6Series, AgreesWithOracleAndContour) {
  const ExampleParams p{1.0, 1.0, 0};
  oracle::HankelOptions opt;
  opt.cutoff = catalog::oracle_cutoff(Example::A6, p);
  const double ref = oracle::hankel0_direct(catalog::example_function(Example::A6, p), 2.0, 1e-10, opt).value;
  EXPECT_NEAR(catalog::a6_series_psi(2.0, 1.0, 1.0).value, ref, 1e-6 * std::abs(ref));
  EXPECT_NEAR(mb::theorem1_transform(catalog::coef_a6(1.0, 1.0), 2.0, 1e-10).value, ref, 1e-8 * std::abs(ref));
}

TEST(A6Series, LargeQLaw) {
  const double q = 15.0;
  const auto r = catalog::a6_series_2f0(q, 1.0, 1.0);
  EXPECT_NEAR(r.value / (std::exp(1.0) * sf::bessel_k0(q)), 1.0, 1e-4);
}

TEST(A6Series, LargeParameterRegime) {
  // ac = 10 at q = a; the 2F0 series is outside its regime, so use the contour
  const double a = 10.0, c = 1.0, q = a;
  const double v = mb::theorem1_transform(catalog::coef_a6(a, c), q, 1e-10).value;
  const double law = std::exp(-q * q / (4.0 * a * a)) / (2.0 * a * a * c * c);
  EXPECT_NEAR(v / law, 1.0, 0.05);
}

TEST(A6Series, ZeroQLimit) {
  EXPECT_NEAR(catalog::a6_q_zero(1.0, 1.0), 0.5 * std::exp(1.0) * 0.21938393439552029, 1e-15);
  EXPECT_NEAR(catalog::a6_q_zero(30.0, 1.0) * 2.0 * 900.0, 1.0, 0.01);
  const auto direct = quad::integrate_adaptive([](double x) { return x * std::exp(-x * x) / (x * x + 1.0); }, 0.0,
                                               INFINITY);
  EXPECT_NEAR(catalog::a6_q_zero(1.0, 1.0), direct.value, 1e-9 * direct.value);
  // the series at small q approaches the limit
  EXPECT_NEAR(catalog::a6_series_psi(1e-3, 1.0, 1.0).value, catalog::a6_q_zero(1.0, 1.0), 1e-4);
}

TEST(BesselProductDerivatives, MatchesTaylorCoefficientsOfBesselProduct) {
  // g(z) = exp(-a^2 z) J_{2n}(c sqrt z), entire in z
  for (int n : {0, 1, 2}) {
    for (double a : {1.0, 0.6}) {
      const double c = 1.3;
      auto g = [=](Complex z) {
        const Complex u = c * c * z / 4.0;
        Complex term(1.0 / std::tgamma(2.0 * n + 1.0), 0.0), sum = term;
        for (int k = 1; k < 80; ++k) {
          term *= -u / (static_cast<double>(k) * (k + 2.0 * n));
          sum += term;
        }
        return std::exp(-a * a * z) * std::pow(u, n) * sum;
      };
      for (int m = 0; m <= 8; ++m) {
        const double expected = (m % 2 ? -1.0 : 1.0) * taylor_bar(g, m, 1.0);
        const double got = catalog::appendix_a_derivatives(m, n, a, c);
        EXPECT_NEAR(got, expected, 1e-9 * std::abs(expected) + 1e-15) << n << " " << m;
      }
    }
  }
}

TEST(BesselProductDerivatives, ThresholdAndFirstRow) {
  EXPECT_EQ(catalog::appendix_a_derivatives(1, 2, 1.0, 1.0), 0.0);
  EXPECT_EQ(catalog::appendix_a_derivatives(0, 3, 1.0, 1.0), 0.0);
  const auto a2 = catalog::coef_a2(1.0, 1.0);
  for (int m = 0; m <= 10; ++m) {
    const double sign = m % 2 ? -1.0 : 1.0;
    EXPECT_NEAR(catalog::appendix_a_derivatives(m, 0, 1.0, 1.0), sign * a2.evaluate(Complex(m, 0.0)).real(),
                1e-12 * std::abs(a2.evaluate(Complex(m, 0.0)).real()));
  }
}

TEST(DecayLaws, GaussianExamplesDecayQuadratically) {
  for (Example ex : {Example::A1, Example::A2}) {
    const ExampleParams p{1.0, 1.0, 0};
    auto la = [&](double q) { return std::log(std::abs(catalog::closed_form(ex, q, p))); };
    const double s1 = (la(15.0) - la(10.0)) / (225.0 - 100.0);
    const double s2 = (la(20.0) - la(15.0)) / (400.0 - 225.0);
    EXPECT_LT(s2, 0.0);
    EXPECT_NEAR(s1, s2, 0.1 * std::abs(s2));
  }
}

TEST(DecayLaws, MeromorphicExamplesDecayLinearly) {
  const ExampleParams p{1.0, 1.0, 1};
  auto check = [](const std::function<double(double)>& value) {
    auto la = [&](double q) { return std::log(std::abs(value(q))); };
    const double s1 = (la(15.0) - la(10.0)) / 5.0;
    const double s2 = (la(20.0) - la(15.0)) / 5.0;
    EXPECT_LT(s2, 0.0);
    EXPECT_NEAR(s1, s2, 0.1 * std::abs(s2));
  };
  for (Example ex : {Example::A3, Example::A4, Example::A5}) {
    check([&](double q) { return catalog::closed_form(ex, q, p); });
  }
  check([](double q) { return catalog::a6_series_2f0(q, 1.0, 1.0).value; });
}
