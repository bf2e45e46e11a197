#pragma once

#include <istream>
#include <string>
#include <vector>

#include "mbhankel/series.hpp"

namespace mbhankel::asym {

/// f^(k)(0) for k = 0..K.
struct DerivativeTable {
  std::vector<double> values;
  std::string origin;
};

/// One value per non-empty line; '#' starts a comment. Throws DomainError
/// on unparsable or non-finite entries.
DerivativeTable read_derivative_table(std::istream& in, const std::string& origin);

/// int_0^inf J0(qx) f(x) dx ~ sum_m (-1)^m c_m f^(2m)(0) / q^{2m+1},
/// c_m = (2m-1)!! / (2^m m!). Needs f^(2k) up to k = max_terms.
SeriesResult willis_j0_series(const DerivativeTable& derivs, double q, int max_terms);

/// int_0^inf J1(qx) f(x) dx ~ f(0)/q + sum_m (-1)^m c_m f^(2m+1)(0) / q^{2m+2}.
/// Needs f^(k) up to k = 2 max_terms - 1.
SeriesResult willis_j1_series(const DerivativeTable& derivs, double q, int max_terms);

/// int_0^inf x f(x) J0(qx) dx ~
///   q^{-3} sum_m (-1)^{m+1} (2m+1)! / (m!)^2 f^(2m+1)(0) (2q)^{-2m}.
/// Needs f^(2k+1) up to k = max_terms.
SeriesResult hankel0_odd_series(const DerivativeTable& derivs, double q, int max_terms);

/// Leading large-q behaviour e^{(ac)^2} K0(qc). A warning is appended when
/// qc < 5.
double a6_large_q(double q, double a, double c, std::vector<std::string>* warnings = nullptr);

/// Optimal truncation of terms t_0..t_M: stop before the first local minimum
/// of |t_k| (k >= 1, zero terms skipped), or after t_{M-1}.
SeriesResult truncate_optimally(const std::vector<double>& terms);

}  // namespace mbhankel::asym
