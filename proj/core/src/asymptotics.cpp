#include "mbhankel/asymptotics.hpp"

#include <cmath>
#include <sstream>

#include "mbhankel/errors.hpp"
#include "mbhankel/special_functions.hpp"

namespace mbhankel::asym {
namespace {

void check_args(const DerivativeTable& d, double q, int max_terms, std::size_t needed) {
  if (!(q > 0.0)) throw DomainError("q must be > 0");
  if (max_terms < 1) throw DomainError("max_terms must be >= 1");
  if (d.values.size() < needed) {
    std::ostringstream os;
    os << "insufficient derivative table: " << d.values.size() << " entries, " << needed << " needed";
    throw DomainError(os.str());
  }
  for (double v : d.values) {
    if (!std::isfinite(v)) throw DomainError("derivative table has a non-finite entry");
  }
}

// (2m-1)!! / (2^m m!)
double willis_coefficient(int m) {
  double c = 1.0;
  for (int k = 1; k <= m; ++k) c *= (2.0 * k - 1.0) / (2.0 * k);
  return c;
}

}  // namespace

DerivativeTable read_derivative_table(std::istream& in, const std::string& origin) {
  DerivativeTable t;
  t.origin = origin;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double v = 0.0;
    if (!(ls >> v)) {
      std::string rest;
      std::istringstream probe(line);
      if (probe >> rest) throw DomainError(origin + ":" + std::to_string(lineno) + ": not a number");
      continue;
    }
    if (!std::isfinite(v)) throw DomainError(origin + ":" + std::to_string(lineno) + ": non-finite value");
    t.values.push_back(v);
  }
  return t;
}

SeriesResult truncate_optimally(const std::vector<double>& terms) {
  if (terms.size() < 2) throw DomainError("truncate_optimally needs at least two terms");
  const std::size_t M = terms.size() - 1;
  std::size_t kstar = M;
  for (std::size_t k = 1; k < M; ++k) {
    if (terms[k] == 0.0) continue;
    std::size_t next = k + 1;
    while (next <= M && terms[next] == 0.0) ++next;
    if (next > M) break;
    if (std::abs(terms[k]) <= std::abs(terms[next])) {
      kstar = k;
      break;
    }
  }
  SeriesResult r;
  double sum = 0.0;
  for (std::size_t k = 0; k < kstar; ++k) {
    sum += terms[k];
    r.partial_sums.push_back(sum);
  }
  r.truncation_index = static_cast<int>(kstar) - 1;
  r.value = sum;
  r.first_omitted = std::abs(terms[kstar]);
  r.error_bound = r.first_omitted;
  return r;
}

SeriesResult willis_j0_series(const DerivativeTable& derivs, double q, int max_terms) {
  check_args(derivs, q, max_terms, 2 * static_cast<std::size_t>(max_terms) + 1);
  std::vector<double> t;
  for (int m = 0; m <= max_terms; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    t.push_back(sign * willis_coefficient(m) * derivs.values[2 * m] / std::pow(q, 2 * m + 1));
  }
  return truncate_optimally(t);
}

SeriesResult willis_j1_series(const DerivativeTable& derivs, double q, int max_terms) {
  check_args(derivs, q, max_terms, 2 * static_cast<std::size_t>(max_terms));
  std::vector<double> t;
  t.push_back(derivs.values[0] / q);
  for (int m = 0; m + 1 <= max_terms; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    t.push_back(sign * willis_coefficient(m) * derivs.values[2 * m + 1] / std::pow(q, 2 * m + 2));
  }
  return truncate_optimally(t);
}

SeriesResult hankel0_odd_series(const DerivativeTable& derivs, double q, int max_terms) {
  check_args(derivs, q, max_terms, 2 * static_cast<std::size_t>(max_terms) + 2);
  std::vector<double> t;
  double coef = 1.0;  // (2m+1)! / (m!)^2
  for (int m = 0; m <= max_terms; ++m) {
    if (m > 0) coef *= (2.0 * m) * (2.0 * m + 1.0) / (static_cast<double>(m) * m);
    const double sign = (m % 2 == 0) ? -1.0 : 1.0;
    t.push_back(sign * coef * derivs.values[2 * m + 1] / (q * q * q * std::pow(2.0 * q, 2 * m)));
  }
  return truncate_optimally(t);
}

double a6_large_q(double q, double a, double c, std::vector<std::string>* warnings) {
  if (!(q > 0.0) || !(a > 0.0) || !(c > 0.0)) throw DomainError("a6_large_q requires q, a, c > 0");
  if (q * c < 5.0 && warnings != nullptr) {
    warnings->push_back("a6_large_q: qc < 5, leading term is not yet accurate");
  }
  return std::exp(a * a * c * c) * sf::bessel_k0(q * c);
}

}  // namespace mbhankel::asym
