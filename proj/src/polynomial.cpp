#include "rootbounds/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace rootbounds {

double horner(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) {
    coeffs_.pop_back();
  }
  if (coeffs_.empty()) {
    throw ZeroPolynomialError{};
  }
}

double Polynomial::coeff(int d) const {
  if (d < 0 || d > degree()) {
    return 0.0;
  }
  return coeffs_[static_cast<std::size_t>(d)];
}

NormalizedPolynomial normalize(const std::vector<double>& raw_coeffs) {
  std::vector<double> c = raw_coeffs;
  while (!c.empty() && c.back() == 0.0) {
    c.pop_back();
  }
  if (c.empty()) {
    throw ZeroPolynomialError{};
  }
  if (c.back() < 0.0) {
    for (double& v : c) {
      v = -v;
    }
  }
  int multiplicity = 0;
  while (c.front() == 0.0) {  // leading coefficient is nonzero, so this stops
    c.erase(c.begin());
    ++multiplicity;
  }
  return {Polynomial(std::move(c)), multiplicity};
}

double evaluate(const Polynomial& p, double x) { return horner(p.coeffs(), x); }

Polynomial derivative(const Polynomial& p) {
  if (p.degree() == 0) {
    throw ConstantPolynomialError{};
  }
  std::vector<double> d(static_cast<std::size_t>(p.degree()));
  for (int j = 1; j <= p.degree(); ++j) {
    d[static_cast<std::size_t>(j - 1)] = static_cast<double>(j) * p.coeff(j);
  }
  return Polynomial(std::move(d));
}

Polynomial reflect(const Polynomial& p) {
  std::vector<double> c = p.coeffs();
  for (std::size_t j = 1; j < c.size(); j += 2) {
    c[j] = -c[j];
  }
  return Polynomial(std::move(c));
}

Polynomial scaled(const Polynomial& p, double c) {
  std::vector<double> v = p.coeffs();
  for (double& x : v) {
    x *= c;
  }
  return Polynomial(std::move(v));
}

SignSplit sign_split(const Polynomial& p) {
  SignSplit s;
  bool low_zeros = true;
  for (int d = 0; d <= p.degree(); ++d) {
    const double c = p.coeff(d);
    if (c == 0.0) {
      if (low_zeros) {
        ++s.zero_root_multiplicity;
      }
      continue;
    }
    low_zeros = false;
    if (c > 0.0) {
      s.positive.emplace(d, c);
      ++s.positive_count;
    } else {
      s.negative_mag.emplace(d, -c);
      ++s.negative_count;
      s.top_negative_degree = d;  // ascending scan keeps the highest
    }
  }
  return s;
}

}  // namespace rootbounds
