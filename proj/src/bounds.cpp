#include "rootbounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rootbounds {

namespace {

void require_normalized(const Polynomial& p) {
  if (!(p.leading() > 0.0) || p.coeff(0) == 0.0) {
    throw std::invalid_argument("polynomial must be normalized first");
  }
}

double magnitude_sum_over_leading(const Polynomial& p) {
  double sum = 0.0;
  for (int j = 0; j < p.degree(); ++j) {
    sum += std::fabs(p.coeff(j));
  }
  return sum / p.leading();
}

void require_mixed_signs(const SignSplit& split) {
  if (split.negative_count == 0) {
    throw AllSameSignError{};
  }
}

void require_negative_terms(const SignSplit& split) {
  if (split.negative_count == 0) {
    throw NoNegativeCoefficientsError{};
  }
}

double negative_magnitude_sum(const SignSplit& split) {
  double sum = 0.0;
  for (const auto& [degree, magnitude] : split.negative_mag) {
    (void)degree;
    sum += magnitude;
  }
  return sum;
}

void check_extraction_degree(const SignSplit& split, int l) {
  require_negative_terms(split);
  const int k = *split.top_negative_degree;
  if (!split.positive.contains(l) || l <= k) {
    throw ExtractionDegreeError("degree " + std::to_string(l) +
                                " is not an admissible extraction degree");
  }
}

}  // namespace

CauchyPolynomial associated_cauchy(const Polynomial& p) {
  std::vector<double> alpha(p.coeffs());
  for (double& a : alpha) {
    a = std::fabs(a);
  }
  return CauchyPolynomial::from_magnitudes(std::move(alpha));
}

double cauchy_bound(const Polynomial& p) {
  require_normalized(p);
  require_mixed_signs(sign_split(p));
  return std::max(1.0, magnitude_sum_over_leading(p));
}

double stage_mu(const Polynomial& p, int s, double rel_tol) {
  require_normalized(p);
  const int n = p.degree();
  if (s < 1 || s > n) {
    throw StageOutOfRangeError("stage " + std::to_string(s) +
                               " outside [1, " + std::to_string(n) + "]");
  }
  require_mixed_signs(sign_split(p));
  if (s == 1) {
    return magnitude_sum_over_leading(p);
  }
  std::vector<double> alpha(static_cast<std::size_t>(s) + 1, 0.0);
  alpha.back() = p.leading();
  for (int i = 1; i < s; ++i) {
    alpha[static_cast<std::size_t>(s - i)] = std::fabs(p.coeff(n - i));
  }
  double tail = 0.0;
  for (int j = 0; j <= n - s; ++j) {
    tail += std::fabs(p.coeff(j));
  }
  alpha[0] = tail;
  return positive_root(CauchyPolynomial::from_magnitudes(std::move(alpha)),
                       rel_tol);
}

double stage_bound(const Polynomial& p, int s, double rel_tol) {
  return std::max(1.0, stage_mu(p, s, rel_tol));
}

double stage2_mu_closed_form(const Polynomial& p) {
  require_normalized(p);
  const int n = p.degree();
  if (n < 2) {
    throw StageOutOfRangeError("stage 2 needs degree >= 2");
  }
  require_mixed_signs(sign_split(p));
  const double an = p.leading();
  const double a1 = std::fabs(p.coeff(n - 1));
  double tail = 0.0;
  for (int j = 0; j <= n - 2; ++j) {
    tail += std::fabs(p.coeff(j));
  }
  return (a1 + std::sqrt(a1 * a1 + 4.0 * an * tail)) / (2.0 * an);
}

std::vector<int> admissible_extraction_degrees(const SignSplit& split) {
  std::vector<int> degrees;
  if (split.negative_count == 0) {
    return degrees;
  }
  const int k = *split.top_negative_degree;
  for (const auto& [degree, coeff] : split.positive) {
    (void)coeff;
    if (degree > k) {
      degrees.push_back(degree);
    }
  }
  return degrees;  // std::map iteration keeps them ascending
}

CauchyPolynomial extract_cauchy(const Polynomial& p, int l) {
  require_normalized(p);
  const SignSplit split = sign_split(p);
  check_extraction_degree(split, l);
  std::vector<double> alpha(static_cast<std::size_t>(l) + 1, 0.0);
  alpha.back() = split.positive.at(l);
  for (const auto& [degree, magnitude] : split.negative_mag) {
    alpha[static_cast<std::size_t>(degree)] = magnitude;
  }
  return CauchyPolynomial::from_magnitudes(std::move(alpha));
}

double neg_sum_bound_l(const Polynomial& p, int l) {
  require_normalized(p);
  const SignSplit split = sign_split(p);
  check_extraction_degree(split, l);
  return std::max(1.0, negative_magnitude_sum(split) / split.positive.at(l));
}

double neg_sum_bound(const Polynomial& p) {
  require_normalized(p);
  const SignSplit split = sign_split(p);
  require_negative_terms(split);
  double a_max = 0.0;
  for (int l : admissible_extraction_degrees(split)) {
    a_max = std::max(a_max, split.positive.at(l));
  }
  return std::max(1.0, negative_magnitude_sum(split) / a_max);
}

double power_bound_l(const Polynomial& p, int l) {
  require_normalized(p);
  const SignSplit split = sign_split(p);
  check_extraction_degree(split, l);
  const int k = *split.top_negative_degree;
  const double ratio = negative_magnitude_sum(split) / split.positive.at(l);
  return std::max(1.0, std::pow(ratio, 1.0 / (l - k)));
}

double power_bound(const Polynomial& p) {
  require_normalized(p);
  const SignSplit split = sign_split(p);
  require_negative_terms(split);
  double best = std::numeric_limits<double>::infinity();
  for (int l : admissible_extraction_degrees(split)) {
    best = std::min(best, power_bound_l(p, l));
  }
  return best;
}

double theorem_bound(const Polynomial& p, double rel_tol) {
  require_normalized(p);
  const SignSplit split = sign_split(p);
  require_negative_terms(split);
  double smallest = std::numeric_limits<double>::infinity();
  for (int l : admissible_extraction_degrees(split)) {
    smallest = std::min(smallest, positive_root(extract_cauchy(p, l), rel_tol));
  }
  return std::max(1.0, smallest);
}

BoundReport all_bounds(const Polynomial& p, double rel_tol) {
  require_normalized(p);
  const SignSplit split = sign_split(p);
  BoundReport r;
  if (split.negative_count == 0) {
    r.all_same_sign = true;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    r.rho = r.rho_prime = r.rho_dprime = r.theorem = r.lagrange = nan;
    return r;
  }
  r.rho = cauchy_bound(p);
  for (int s = 1; s <= std::min(4, p.degree()); ++s) {
    r.stage_bounds.emplace(s, stage_bound(p, s, rel_tol));
  }
  for (int l : admissible_extraction_degrees(split)) {
    r.rho_prime_per_l.emplace(l, neg_sum_bound_l(p, l));
    r.rho_dprime_per_l.emplace(l, power_bound_l(p, l));
  }
  r.rho_prime = neg_sum_bound(p);
  r.rho_dprime = power_bound(p);
  r.theorem = theorem_bound(p, rel_tol);
  r.lagrange = lagrange_type_bound(associated_cauchy(p));
  return r;
}

std::vector<std::pair<std::string, double>> headline_bounds(const BoundReport& r) {
  std::vector<std::pair<std::string, double>> out;
  if (r.all_same_sign) {
    return out;
  }
  out.emplace_back("rho", r.rho);
  for (int s = 2; s <= 4; ++s) {
    if (auto it = r.stage_bounds.find(s); it != r.stage_bounds.end()) {
      out.emplace_back("stage" + std::to_string(s), it->second);
    }
  }
  out.emplace_back("rho_prime", r.rho_prime);
  out.emplace_back("rho_dprime", r.rho_dprime);
  out.emplace_back("theorem", r.theorem);
  out.emplace_back("lagrange", r.lagrange);
  return out;
}

std::vector<std::pair<std::string, double>> all_bound_entries(const BoundReport& r) {
  std::vector<std::pair<std::string, double>> out;
  if (r.all_same_sign) {
    return out;
  }
  out.emplace_back("rho", r.rho);
  for (const auto& [s, value] : r.stage_bounds) {
    out.emplace_back("stage" + std::to_string(s), value);
  }
  for (const auto& [l, value] : r.rho_prime_per_l) {
    out.emplace_back("rho_prime[l=" + std::to_string(l) + "]", value);
  }
  out.emplace_back("rho_prime", r.rho_prime);
  for (const auto& [l, value] : r.rho_dprime_per_l) {
    out.emplace_back("rho_dprime[l=" + std::to_string(l) + "]", value);
  }
  out.emplace_back("rho_dprime", r.rho_dprime);
  out.emplace_back("theorem", r.theorem);
  out.emplace_back("lagrange", r.lagrange);
  return out;
}

}  // namespace rootbounds
