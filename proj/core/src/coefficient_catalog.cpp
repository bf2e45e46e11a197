#include "mbhankel/coefficient_catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "mbhankel/errors.hpp"
#include "mbhankel/special_functions.hpp"

namespace mbhankel::catalog {
namespace {

constexpr double kSplitY = 6.0;

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw DomainError(std::string(what) + " must be > 0");
}

// Kahan summation on both components.
struct CompensatedSum {
  Complex sum{0.0, 0.0};
  Complex comp{0.0, 0.0};
  void add(Complex x) {
    const Complex y = x - comp;
    const Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// sum_p y^p / ((s+1)(s+2)...(s+p+1))
Complex a6_remainder_series(Complex s, double y) {
  CompensatedSum acc;
  Complex term = 1.0 / (s + 1.0);
  acc.add(term);
  for (int p = 1; p < 100000; ++p) {
    term *= y / (s + static_cast<double>(p) + 1.0);
    acc.add(term);
    if (p > y && std::abs(term) < 1e-17 * std::abs(acc.sum)) return acc.sum;
  }
  throw ConvergenceError("coef_a6: remainder series did not converge");
}

}  // namespace

CoefficientFn coef_a1(double a) {
  require_positive(a, "a");
  CoefficientFn f;
  const double la = std::log(a);
  f.terms.push_back([la](Complex s) { return std::exp(2.0 * s * la); });
  f.label = "a1";
  f.params = {{"a", a}};
  return f;
}

CoefficientFn coef_a2(double a, double c) {
  require_positive(a, "a");
  require_positive(c, "c");
  CoefficientFn f;
  const double la = std::log(a);
  const double z = -c * c / (4.0 * a * a);
  f.terms.push_back([la, z](Complex s) { return std::exp(2.0 * s * la) * sf::hyp1f1_c(-s, 1.0, z); });
  f.label = "a2";
  f.params = {{"a", a}, {"c", c}};
  return f;
}

CoefficientFn coef_a3(double a, int n) {
  require_positive(a, "a");
  if (n < 0) throw DomainError("n must be >= 0");
  CoefficientFn f;
  const double la = std::log(a);
  const double lg = std::lgamma(n + 1.0);
  f.terms.push_back([la, lg, n](Complex s) {
    return std::exp(-(2.0 * s + 2.0 * n + 2.0) * la + log_gamma_c(s + (n + 1.0)) - lg);
  });
  f.label = "a3";
  f.params = {{"a", a}, {"n", n}};
  return f;
}

CoefficientFn coef_a4(double a, int n) {
  require_positive(a, "a");
  if (n < 0) throw DomainError("n must be >= 0");
  CoefficientFn f;
  const double la = std::log(a);
  const double lg = std::lgamma(n + 1.5);
  f.terms.push_back([la, lg, n](Complex s) {
    return std::exp(-(2.0 * s + 2.0 * n + 3.0) * la + log_gamma_c(s + (n + 1.5)) - lg);
  });
  f.label = "a4";
  f.params = {{"a", a}, {"n", n}};
  return f;
}

CoefficientFn coef_a5(double a, double c) {
  require_positive(a, "a");
  require_positive(c, "c");
  CoefficientFn f;
  const double lc = std::log(c);
  const double i0 = sf::bessel_i0(a * c);
  f.terms.push_back([lc, i0](Complex s) { return std::exp(-(2.0 * s + 2.0) * lc + log_gamma_c(s + 1.0)) * i0; });
  const double lh = std::log(a / 2.0);
  const double z = a * a * c * c / 4.0;
  f.terms.push_back([lh, z](Complex s) {
    const Complex b = s + 2.0;
    return -std::exp((2.0 * s + 2.0) * lh) * sf::hyp1f2_c(1.0, b, b, z) * rgamma_c(b) / (s + 1.0);
  });
  f.label = "a5";
  f.params = {{"a", a}, {"c", c}};
  f.min_q = a;
  return f;
}

CoefficientFn coef_a6(double a, double c) {
  require_positive(a, "a");
  require_positive(c, "c");
  CoefficientFn f;
  const double lc = std::log(c);
  const double y = a * a * c * c;
  if (y <= kSplitY) {
    f.terms.push_back([lc, y](Complex s) { return std::exp(-(2.0 * s + 2.0) * lc + log_gamma_c(s + 1.0) + y); });
    const double ly = std::log(y);
    f.terms.push_back([lc, ly, y](Complex s) {
      return -std::exp((s + 1.0) * (ly - 2.0 * lc)) * a6_remainder_series(s, y);
    });
  } else {
    f.terms.push_back([lc, y](Complex s) {
      return std::exp(-(2.0 * s + 2.0) * lc) * sf::exp_upper_gamma_cf(s + 1.0, y);
    });
  }
  f.label = "a6";
  f.params = {{"a", a}, {"c", c}};
  return f;
}

CoefficientFn coef_a7(double a) {
  require_positive(a, "a");
  CoefficientFn f;
  const double la = std::log(a);
  const double lsp = 0.5 * std::log(kPi);
  f.terms.push_back([la, lsp](Complex s) { return std::exp(-(4.0 * s + 2.0) * la + log_gamma_c(s + 0.5) - lsp); });
  f.kind = TheoremKind::theorem2;
  f.strip_min = -0.5;
  f.label = "a7";
  f.params = {{"a", a}};
  return f;
}

CoefficientFn coefficient(Example ex, const ExampleParams& p) {
  switch (ex) {
    case Example::A1: return coef_a1(p.a);
    case Example::A2: return coef_a2(p.a, p.c);
    case Example::A3: return coef_a3(p.a, p.n);
    case Example::A4: return coef_a4(p.a, p.n);
    case Example::A5: return coef_a5(p.a, p.c);
    case Example::A6: return coef_a6(p.a, p.c);
    case Example::A7: return coef_a7(p.a);
  }
  throw DomainError("unknown example");
}

Example parse_example(const std::string& label) {
  std::string l = label;
  std::transform(l.begin(), l.end(), l.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (l.size() == 2 && l[0] == 'a' && l[1] >= '1' && l[1] <= '7') return static_cast<Example>(l[1] - '1');
  throw DomainError("unknown example label '" + label + "' (expected a1..a7)");
}

std::string label(Example ex) { return "a" + std::to_string(static_cast<int>(ex) + 1); }

double closed_form(Example ex, double q, const ExampleParams& p) {
  if (!(q >= 0.0)) throw DomainError("q must be >= 0");
  const double a = p.a, c = p.c;
  const int n = p.n;
  require_positive(a, "a");
  switch (ex) {
    case Example::A1:
      return std::exp(-q * q / (4.0 * a * a)) / (2.0 * a * a);
    case Example::A2:
      require_positive(c, "c");
      return std::exp(-(q * q + c * c) / (4.0 * a * a)) * sf::bessel_i0(q * c / (2.0 * a * a)) / (2.0 * a * a);
    case Example::A3:
      require_positive(q, "q");
      if (n < 0) throw DomainError("n must be >= 0");
      return std::pow(q / (2.0 * a), n) * sf::bessel_kn(n, q * a) / std::tgamma(n + 1.0);
    case Example::A4:
      require_positive(q, "q");
      if (n < 0) throw DomainError("n must be >= 0");
      return std::pow(q / (2.0 * a), n + 0.5) * sf::bessel_k_half(n, q * a) / std::tgamma(n + 1.5);
    case Example::A5:
      require_positive(c, "c");
      if (!(q > a)) throw DomainError("a5 requires q > a");
      return sf::bessel_i0(a * c) * sf::bessel_k0(q * c);
    case Example::A6:
      throw DomainError("a6 has no closed form; use the series or contour methods");
    case Example::A7: {
      require_positive(q, "q");
      const double x = q * a / std::sqrt(2.0);
      return sf::bessel_j0(x) * sf::bessel_k0(x);
    }
  }
  throw DomainError("unknown example");
}

std::function<double(double)> example_function(Example ex, const ExampleParams& p) {
  const double a = p.a, c = p.c;
  const int n = p.n;
  switch (ex) {
    case Example::A1: return [a](double x) { return std::exp(-a * a * x * x); };
    case Example::A2: return [a, c](double x) { return std::exp(-a * a * x * x) * sf::bessel_j0(c * x); };
    case Example::A3: return [a, n](double x) { return std::pow(x * x + a * a, -n - 1.0); };
    case Example::A4: return [a, n](double x) { return std::pow(x * x + a * a, -n - 1.5); };
    case Example::A5: return [a, c](double x) { return sf::bessel_j0(a * x) / (x * x + c * c); };
    case Example::A6: return [a, c](double x) { return std::exp(-a * a * x * x) / (x * x + c * c); };
    case Example::A7: return [a](double x) { return 1.0 / std::sqrt(x * x * x * x + a * a * a * a); };
  }
  throw DomainError("unknown example");
}

double oracle_cutoff(Example ex, const ExampleParams& p) {
  switch (ex) {
    case Example::A1:
    case Example::A2:
    case Example::A6:
      return std::sqrt(41.5) / p.a;
    default:
      return std::numeric_limits<double>::infinity();
  }
}

SeriesResult a6_series_psi(double q, double a, double c, int max_terms) {
  require_positive(q, "q");
  require_positive(a, "a");
  require_positive(c, "c");
  if (max_terms < 1) throw DomainError("max_terms must be >= 1");
  const double y = a * a * c * c;
  const double X = q * q / (4.0 * a * a);
  const double lead = std::exp(y) * sf::bessel_k0(q * c);
  const double pref = 0.5 * std::exp(-X);
  auto term = [&](int p) { return std::pow(y, p) * sf::tricomi_psi(p + 1, X); };

  SeriesResult r;
  double sum = 0.0;
  double comp = 0.0;
  for (int p = 0; p < max_terms; ++p) {
    const double t = term(p);
    const double yk = t - comp;
    const double s2 = sum + yk;
    comp = (s2 - sum) - yk;
    sum = s2;
    r.partial_sums.push_back(lead - pref * sum);
    if (std::abs(t) < 1e-14 * std::abs(sum)) {
      r.truncation_index = p;
      r.value = r.partial_sums.back();
      r.first_omitted = pref * std::abs(term(p + 1));
      r.error_bound = std::max(r.first_omitted, pref * std::abs(t));
      return r;
    }
  }
  throw ConvergenceError("a6_series_psi: no convergence within max_terms", pref * std::abs(term(max_terms)));
}

SeriesResult a6_series_2f0(double q, double a, double c, int max_terms) {
  require_positive(q, "q");
  require_positive(a, "a");
  require_positive(c, "c");
  if (max_terms < 1) throw DomainError("max_terms must be >= 1");
  const double y = a * a * c * c;
  const double X = q * q / (4.0 * a * a);
  const double z = -4.0 * a * a / (q * q);
  const double r2 = std::pow(2.0 * a * a * c / q, 2);
  const double lead = std::exp(y) * sf::bessel_k0(q * c);
  const double pref = 2.0 * a * a / (q * q) * std::exp(-X);

  SeriesResult r;
  double sum = 0.0;
  double inner_bound = 0.0;
  double rp = 1.0;
  int p = 0;
  double last_term = 0.0;
  for (; p < max_terms; ++p) {
    sf::AsymptoticValue inner;
    try {
      inner = sf::hyp2f0_asymptotic(p + 1.0, p + 1.0, z);
    } catch (const ConvergenceError&) {
      break;
    }
    last_term = rp * inner.value;
    sum += last_term;
    inner_bound += rp * inner.error_bound;
    r.partial_sums.push_back(lead - pref * sum);
    rp *= r2;
    if (std::abs(rp) < 1e-17 * std::abs(sum)) {
      ++p;
      break;
    }
  }
  if (p == 0) {
    throw ConvergenceError("a6_series_2f0: q too small for the asymptotic 2F0 representation");
  }
  double tail = 0.0;
  if (r2 < 1.0) {
    tail = rp / (1.0 - r2);
  } else {
    throw ConvergenceError("a6_series_2f0: outer series does not converge ((2a^2c/q)^2 >= 1)");
  }
  r.truncation_index = static_cast<int>(r.partial_sums.size()) - 1;
  r.value = r.partial_sums.back();
  r.first_omitted = pref * rp;
  r.error_bound = pref * (inner_bound + tail);
  if (q * c < 5.0) r.warnings.push_back("a6_series_2f0: qc < 5, outside the asymptotic regime");
  return r;
}

double a6_q_zero(double a, double c) {
  require_positive(a, "a");
  require_positive(c, "c");
  return 0.5 * sf::exp_incomplete_gamma_upper0(a * a * c * c);
}

double appendix_a_derivatives(int m, int n, double a, double c) {
  if (m < 0 || n < 0) throw DomainError("m and n must be >= 0");
  require_positive(a, "a");
  if (m < n) return 0.0;
  const double w = c * c / (4.0 * a * a);
  // m! / (m+n)!
  double ratio = 1.0;
  for (int k = m + 1; k <= m + n; ++k) ratio /= k;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign * ratio * std::pow(a, 2.0 * m) * std::pow(-w, n) * sf::laguerre_gen(m - n, 2.0 * n, -w);
}

}  // namespace mbhankel::catalog
