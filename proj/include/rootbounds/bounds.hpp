#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rootbounds/cauchy.hpp"
#include "rootbounds/polynomial.hpp"

namespace rootbounds {

/// Every named upper bound for one polynomial. When all coefficients share
/// one sign the polynomial has no positive roots, `all_same_sign` is set and
/// the numeric fields are meaningless (NaN / empty maps).
struct BoundReport {
  bool all_same_sign = false;
  /// max{1, sum of |a_j| / a_n}, j < n.
  double rho = 0.0;
  /// s -> max{1, mu_s} for s in {1..4} clipped to [1, degree].
  std::map<int, double> stage_bounds;
  /// l -> max{1, (sum of negative-coefficient magnitudes) / A_l}.
  std::map<int, double> rho_prime_per_l;
  double rho_prime = 0.0;
  /// l -> max{1, ((sum of magnitudes) / A_l)^(1/(l-k))}.
  std::map<int, double> rho_dprime_per_l;
  double rho_dprime = 0.0;
  /// max{1, smallest positive root over all extractable Cauchy polynomials}.
  double theorem = 0.0;
  /// Lagrange-type bound of the magnitude polynomial.
  double lagrange = 0.0;
};

/// The Cauchy polynomial |a_n| x^n - |a_{n-1}| x^{n-1} - ... - |a_0| built
/// from the magnitudes of p's coefficients. Throws NotCauchyError when every
/// lower coefficient is zero.
CauchyPolynomial associated_cauchy(const Polynomial& p);

/// max{1, sum_{j<n} |a_j| / a_n}. Throws AllSameSignError when p has no
/// negative coefficients.
double cauchy_bound(const Polynomial& p);

/// Unique positive root mu_s of the recursion exited at degree s:
///   a_n x^s - |a_{n-1}| x^{s-1} - ... - |a_{n-s+1}| x - (|a_{n-s}| + ... + |a_0|).
/// s = 1 is evaluated directly as the coefficient-magnitude sum. Throws
/// StageOutOfRangeError unless 1 <= s <= degree, AllSameSignError when p has
/// no negative coefficients.
double stage_mu(const Polynomial& p, int s, double rel_tol = 1e-12);

/// max{1, stage_mu(p, s)}; an upper bound on all real roots of p.
double stage_bound(const Polynomial& p, int s, double rel_tol = 1e-12);

/// Discriminant form of mu_2, used to cross-check the solver:
///   [ |a_{n-1}| + sqrt(a_{n-1}^2 + 4 a_n (|a_{n-2}| + ... + |a_0|)) ] / (2 a_n).
double stage2_mu_closed_form(const Polynomial& p);

/// Positive-coefficient degrees l admissible for extraction: l strictly
/// above every negative-coefficient degree, ascending.
std::vector<int> admissible_extraction_degrees(const SignSplit& split);

/// The Cauchy polynomial A_l x^l minus every negative-coefficient term of p.
/// Throws NoNegativeCoefficientsError / ExtractionDegreeError.
CauchyPolynomial extract_cauchy(const Polynomial& p, int l);

/// max{1, (sum of negative-coefficient magnitudes) / A_l}.
double neg_sum_bound_l(const Polynomial& p, int l);

/// Sharpest of the above: denominator A_max = max admissible A_l.
double neg_sum_bound(const Polynomial& p);

/// max{1, ((sum of magnitudes)/A_l)^(1/(l-k))} with k the highest
/// negative-coefficient degree.
double power_bound_l(const Polynomial& p, int l);

/// Minimum of power_bound_l over admissible l.
double power_bound(const Polynomial& p);

/// max{1, min over admissible l of the positive root of extract_cauchy(p, l)}.
/// The sharpest bound of the family.
double theorem_bound(const Polynomial& p, double rel_tol = 1e-12);

/// Computes every bound. Never throws for a normalized input; the
/// all-same-sign case is encoded in the report.
BoundReport all_bounds(const Polynomial& p, double rel_tol = 1e-12);

/// The eight headline bounds in fixed order {rho, stage2, stage3, stage4,
/// rho_prime, rho_dprime, theorem, lagrange}, skipping stages the degree
/// does not admit. Empty when all_same_sign.
std::vector<std::pair<std::string, double>> headline_bounds(const BoundReport& r);

/// Every bound claim in the report, per-l entries included.
std::vector<std::pair<std::string, double>> all_bound_entries(const BoundReport& r);

}  // namespace rootbounds
