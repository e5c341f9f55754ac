#pragma once

#include <map>
#include <vector>

#include "rootbounds/polynomial.hpp"

namespace rootbounds {

/// A polynomial with positive leading coefficient and non-positive remaining
/// coefficients, at least one of them strictly negative. Stored as the
/// magnitudes alpha[j] >= 0 of the represented polynomial
///   alpha[n] x^n - sum_{j<n} alpha[j] x^j,
/// which has exactly one sign change and hence a unique positive root.
class CauchyPolynomial {
 public:
  /// Validates and takes ownership of the magnitude sequence (ascending
  /// degree). Throws NotCauchyError when the data does not describe a
  /// Cauchy polynomial.
  static CauchyPolynomial from_magnitudes(std::vector<double> alpha);

  int degree() const { return static_cast<int>(alpha_.size()) - 1; }
  double alpha(int j) const {
    return alpha_[static_cast<std::size_t>(j)];
  }
  const std::vector<double>& magnitudes() const { return alpha_; }

  /// Value of the represented polynomial.
  double value(double x) const { return horner(signed_, x); }
  double slope(double x) const;

  /// Represented polynomial with signed coefficients.
  Polynomial as_polynomial() const { return Polynomial(signed_); }

 private:
  explicit CauchyPolynomial(std::vector<double> alpha);

  std::vector<double> alpha_;
  std::vector<double> signed_;
};

/// Builds a CauchyPolynomial from a leading term and the magnitudes of the
/// lower terms. Zero-valued lower terms are stored but ignored by the
/// solver; a negative lower magnitude (a positive coefficient below the
/// leading term) or an all-zero lower part throws NotCauchyError.
CauchyPolynomial make_cauchy(int leading_degree, double leading_coeff,
                             const std::map<int, double>& lower_terms);

/// Guaranteed lower bound on the unique positive root:
/// max over t with alpha[n-t] > 0 of (alpha[n-t]/alpha[n])^(1/t).
double lower_bound_cauchy(const CauchyPolynomial& c);

/// Sum of the two largest elements of the same ratio sequence (the single
/// element when only one exists); classical upper bound on the root.
double lagrange_type_bound(const CauchyPolynomial& c);

/// Unique positive root, found by a safeguarded bisection/Newton hybrid on
/// the bracket [lower_bound_cauchy, max(1, sum of lower magnitudes over the
/// leading one)]. The result satisfies |result - root| <= rel_tol * max(1,
/// root). rel_tol must lie in (0, 1e-6]. Throws ToleranceNotReachedError
/// after 500 iterations.
double positive_root(const CauchyPolynomial& c, double rel_tol = 1e-12);

}  // namespace rootbounds
