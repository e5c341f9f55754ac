#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rootbounds/errors.hpp"

namespace rootbounds {

/// Horner evaluation of a dense coefficient sequence (ascending degree).
double horner(std::span<const double> coeffs, double x);

/// Dense univariate real polynomial, coefficients stored by ascending degree.
/// The leading coefficient is always nonzero; the zero polynomial is not
/// representable.
class Polynomial {
 public:
  /// Strips zero coefficients on the high-degree side. Throws
  /// ZeroPolynomialError when nothing remains.
  explicit Polynomial(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double leading() const { return coeffs_.back(); }

  /// Coefficient of x^d; zero outside the stored range.
  double coeff(int d) const;

  const std::vector<double>& coeffs() const { return coeffs_; }

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<double> coeffs_;
};

struct NormalizedPolynomial {
  Polynomial poly;
  /// Number of trailing zero coefficients stripped from the constant-term
  /// side, i.e. the multiplicity of the root x = 0 that was factored out.
  int zero_root_multiplicity = 0;
};

/// Canonical form: high-side zeros removed, leading coefficient made
/// positive (negating all coefficients if needed), factor x^m stripped and
/// reported. The result has a nonzero constant term.
NormalizedPolynomial normalize(const std::vector<double>& raw_coeffs);

double evaluate(const Polynomial& p, double x);

/// Formal derivative. Throws ConstantPolynomialError for degree 0.
Polynomial derivative(const Polynomial& p);

/// p(-x). Preserves the root set up to reflection.
Polynomial reflect(const Polynomial& p);

/// c * p for nonzero c.
Polynomial scaled(const Polynomial& p, double c);

/// Partition of the coefficients by sign. Zero coefficients belong to
/// neither map.
struct SignSplit {
  std::map<int, double> positive;      // degree -> coefficient (> 0)
  std::map<int, double> negative_mag;  // degree -> |coefficient| (> 0)
  int positive_count = 0;
  int negative_count = 0;
  /// Highest degree carrying a negative coefficient; empty when none do.
  std::optional<int> top_negative_degree;
  /// Consecutive zero coefficients from degree 0 upward (always 0 for a
  /// normalized polynomial).
  int zero_root_multiplicity = 0;
};

SignSplit sign_split(const Polynomial& p);

}  // namespace rootbounds
