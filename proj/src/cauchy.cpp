#include "rootbounds/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rootbounds {

namespace {

constexpr int kMaxIterations = 500;
constexpr double kBracketFloor = 1e-300;

void check_rel_tol(double rel_tol) {
  if (!(rel_tol > 0.0) || rel_tol > 1e-6) {
    throw std::invalid_argument("rel_tol must lie in (0, 1e-6]");
  }
}

}  // namespace

CauchyPolynomial::CauchyPolynomial(std::vector<double> alpha)
    : alpha_(std::move(alpha)), signed_(alpha_) {
  for (std::size_t j = 0; j + 1 < signed_.size(); ++j) {
    signed_[j] = -signed_[j];
  }
}

CauchyPolynomial CauchyPolynomial::from_magnitudes(std::vector<double> alpha) {
  if (alpha.size() < 2) {
    throw NotCauchyError("degree must be at least 1");
  }
  if (!(alpha.back() > 0.0)) {
    throw NotCauchyError("leading magnitude must be positive");
  }
  bool any_lower = false;
  for (std::size_t j = 0; j + 1 < alpha.size(); ++j) {
    if (alpha[j] < 0.0) {
      throw NotCauchyError("lower-term magnitudes must be non-negative");
    }
    any_lower |= alpha[j] > 0.0;
  }
  if (!any_lower) {
    throw NotCauchyError("a monomial is not a Cauchy polynomial");
  }
  return CauchyPolynomial(std::move(alpha));
}

double CauchyPolynomial::slope(double x) const {
  double acc = 0.0;
  for (int j = degree(); j >= 1; --j) {
    acc = acc * x + static_cast<double>(j) * signed_[static_cast<std::size_t>(j)];
  }
  return acc;
}

CauchyPolynomial make_cauchy(int leading_degree, double leading_coeff,
                             const std::map<int, double>& lower_terms) {
  if (leading_degree < 1) {
    throw NotCauchyError("degree must be at least 1");
  }
  if (!(leading_coeff > 0.0)) {
    throw NotCauchyError("leading coefficient must be positive");
  }
  std::vector<double> alpha(static_cast<std::size_t>(leading_degree) + 1, 0.0);
  alpha.back() = leading_coeff;
  for (const auto& [degree, magnitude] : lower_terms) {
    if (degree < 0 || degree >= leading_degree) {
      throw NotCauchyError("lower terms must sit strictly below the leading degree");
    }
    alpha[static_cast<std::size_t>(degree)] = magnitude;
  }
  return CauchyPolynomial::from_magnitudes(std::move(alpha));
}

double lower_bound_cauchy(const CauchyPolynomial& c) {
  const int n = c.degree();
  double best = 0.0;
  for (int t = 1; t <= n; ++t) {
    const double a = c.alpha(n - t);
    if (a > 0.0) {
      best = std::max(best, std::pow(a / c.alpha(n), 1.0 / t));
    }
  }
  return best;
}

double lagrange_type_bound(const CauchyPolynomial& c) {
  const int n = c.degree();
  double largest = 0.0;
  double second = 0.0;
  bool any = false;
  for (int t = 1; t <= n; ++t) {
    const double a = c.alpha(n - t);
    if (a <= 0.0) {
      continue;
    }
    const double r = std::pow(a / c.alpha(n), 1.0 / t);
    if (!any || r > largest) {
      second = any ? largest : 0.0;
      largest = r;
      any = true;
    } else if (r > second) {
      second = r;
    }
  }
  return largest + second;
}

double positive_root(const CauchyPolynomial& c, double rel_tol) {
  check_rel_tol(rel_tol);

  // Factor out the common power of x when the constant term is zero; the
  // positive root is unchanged and the ratio sequence below is identical.
  std::vector<double> alpha = c.magnitudes();
  std::size_t shift = 0;
  while (alpha[shift] == 0.0) {
    ++shift;
  }
  if (shift > 0) {
    alpha.erase(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  const CauchyPolynomial reduced = CauchyPolynomial::from_magnitudes(std::move(alpha));

  const int n = reduced.degree();
  double lower_sum = 0.0;
  for (int j = 0; j < n; ++j) {
    lower_sum += reduced.alpha(j);
  }

  double lo = std::max(lower_bound_cauchy(reduced), kBracketFloor);
  double hi = std::max(1.0, lower_sum / reduced.alpha(n));

  double flo = reduced.value(lo);
  if (flo >= 0.0) {
    // Mathematically f(lo) <= 0; a positive value means lo already sits at
    // the root up to rounding.
    return lo;
  }
  double fhi = reduced.value(hi);
  if (fhi <= 0.0) {
    return hi;
  }

  double x = 0.5 * (lo + hi);
  double dx_old = hi - lo;
  double dx = dx_old;
  double fx = reduced.value(x);
  double dfx = reduced.slope(x);

  for (int it = 0; it < kMaxIterations; ++it) {
    // Newton only when the step stays inside the bracket and keeps shrinking
    // fast enough; otherwise bisect.
    const bool newton_ok =
        dfx != 0.0 &&
        ((x - hi) * dfx - fx) * ((x - lo) * dfx - fx) < 0.0 &&
        std::fabs(2.0 * fx) <= std::fabs(dx_old * dfx);
    dx_old = dx;
    if (newton_ok) {
      dx = fx / dfx;
      x -= dx;
    } else {
      dx = 0.5 * (hi - lo);
      x = lo + dx;
    }
    if (std::fabs(dx) <= 0.5 * rel_tol * std::max(1.0, x)) {
      return x;
    }
    fx = reduced.value(x);
    if (fx == 0.0) {
      return x;
    }
    if (fx < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    dfx = reduced.slope(x);
    if (hi - lo <= rel_tol * std::max(1.0, lo)) {
      return 0.5 * (lo + hi);
    }
  }
  throw ToleranceNotReachedError{};
}

}  // namespace rootbounds
