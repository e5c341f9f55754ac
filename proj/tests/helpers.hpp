#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

// Test-side utilities kept independent of the library implementation so
// they can serve as oracles for it.
namespace testutil {

// Plain sign bisection; f(lo) and f(hi) must have opposite signs.
inline double bisect_root(const std::function<double(double)>& f, double lo,
                          double hi, int iterations = 200) {
  double flo = f(lo);
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) {
      return mid;
    }
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Straightforward power-form evaluation, deliberately not Horner.
inline double eval_powers(const std::vector<double>& coeffs, double x) {
  double sum = 0.0;
  double xp = 1.0;
  for (double c : coeffs) {
    sum += c * xp;
    xp *= x;
  }
  return sum;
}

// Magnitudes of a random Cauchy polynomial: alpha[n] > 0, at least one
// strictly positive lower term, optional zero gaps.
inline std::vector<double> random_cauchy_magnitudes(std::mt19937& rng,
                                                    int min_degree = 1,
                                                    int max_degree = 10,
                                                    bool force_constant = false) {
  std::uniform_int_distribution<int> degree_dist(min_degree, max_degree);
  std::uniform_real_distribution<double> mag(0.0, 10.0);
  std::uniform_real_distribution<double> lead(0.1, 10.0);
  std::bernoulli_distribution keep(0.7);
  const int n = degree_dist(rng);
  std::vector<double> alpha(static_cast<std::size_t>(n) + 1, 0.0);
  alpha.back() = lead(rng);
  bool any = false;
  for (int j = 0; j < n; ++j) {
    if (keep(rng)) {
      alpha[static_cast<std::size_t>(j)] = mag(rng);
      any = any || alpha[static_cast<std::size_t>(j)] > 0.0;
    }
  }
  if (force_constant || !any) {
    alpha[0] = lead(rng);
  }
  return alpha;
}

}  // namespace testutil
