#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rootbounds/polynomial.hpp"

namespace rootbounds {

/// Ground truth produced by Sturm isolation plus bisection refinement.
/// Multiplicities are collapsed: `roots` holds the distinct real roots in
/// ascending order.
struct OracleResult {
  std::vector<double> roots;
  std::optional<double> max_real_root;
  std::pair<double, double> search_interval{0.0, 0.0};
};

/// Monic square-free part p / gcd(p, p'). Degree-0 inputs are returned as-is.
Polynomial square_free_part(const Polynomial& p);

/// Sturm chain of the square-free part: p0, p0', then negated scaled
/// Euclidean remainders down to a constant. Requires degree >= 1.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of distinct real roots in (a, b] by Sturm's theorem. Endpoints
/// landing exactly on a root are nudged outward by an ulp-scale step.
int count_real_roots(const Polynomial& p, double a, double b);

/// Half-open interval (lo, hi] containing exactly one distinct real root.
struct RootInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Disjoint isolating intervals for every distinct real root, ascending.
/// Requires degree >= 1; throws BisectionDepthError past 2000 levels.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p);

/// Largest real root refined to width tol * max(1, |root|); empty when the
/// polynomial has no real roots. tol must lie in (0, 1e-6].
std::optional<double> max_real_root(const Polynomial& p, double tol = 1e-12);

/// Isolates and refines every distinct real root.
OracleResult find_real_roots(const Polynomial& p, double tol = 1e-12);

}  // namespace rootbounds
