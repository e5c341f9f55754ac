#include "rootbounds/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rootbounds/bounds.hpp"

namespace rootbounds {

namespace {

constexpr int kMaxDepth = 2000;
constexpr double kGcdSnap = 1e-12;

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) {
    m = std::max(m, std::fabs(x));
  }
  return m;
}

void trim_leading_zeros(std::vector<double>& v) {
  while (!v.empty() && v.back() == 0.0) {
    v.pop_back();
  }
}

// Remainder of a / b (coefficient vectors, ascending degree). b nonzero.
std::vector<double> remainder_of(std::vector<double> a,
                                 const std::vector<double>& b) {
  const auto nb = b.size();
  const double lead = b.back();
  while (a.size() >= nb) {
    const double q = a.back() / lead;
    const auto offset = a.size() - nb;
    for (std::size_t i = 0; i < nb; ++i) {
      a[offset + i] -= q * b[i];
    }
    a.pop_back();  // cancelled term, drop it exactly
  }
  return a;
}

// Quotient of a / b, remainder discarded.
std::vector<double> quotient_of(std::vector<double> a,
                                const std::vector<double>& b) {
  const auto nb = b.size();
  const double lead = b.back();
  if (a.size() < nb) {
    return {0.0};
  }
  std::vector<double> q(a.size() - nb + 1, 0.0);
  while (a.size() >= nb) {
    const double step = a.back() / lead;
    q[a.size() - nb] = step;
    const auto offset = a.size() - nb;
    for (std::size_t i = 0; i < nb; ++i) {
      a[offset + i] -= step * b[i];
    }
    a.pop_back();
  }
  return q;
}

void scale_to_unit(std::vector<double>& v) {
  const double m = inf_norm(v);
  if (m > 0.0) {
    for (double& x : v) {
      x /= m;
    }
  }
}

// Euclidean gcd with zero-snapping relative to the dividend's leading
// coefficient; inputs are consumed. Result is monic.
std::vector<double> poly_gcd(std::vector<double> a, std::vector<double> b) {
  scale_to_unit(a);
  scale_to_unit(b);
  while (true) {
    const double snap = kGcdSnap * std::fabs(a.back());
    std::vector<double> r = remainder_of(a, b);
    for (double& x : r) {
      if (std::fabs(x) <= snap) {
        x = 0.0;
      }
    }
    trim_leading_zeros(r);
    if (r.empty()) {
      break;
    }
    scale_to_unit(r);
    a = std::move(b);
    b = std::move(r);
  }
  const double lead = b.back();
  for (double& x : b) {
    x /= lead;
  }
  return b;
}

double chain_eval(const Polynomial& p, double x) {
  return horner(p.coeffs(), x);
}

int sign_variations(const std::vector<Polynomial>& chain, double x) {
  int variations = 0;
  int prev = 0;
  for (const Polynomial& p : chain) {
    const double v = chain_eval(p, x);
    const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
    if (s == 0) {
      continue;
    }
    if (prev != 0 && s != prev) {
      ++variations;
    }
    prev = s;
  }
  return variations;
}

// Shift x upward off any root of the chain head by growing ulp-scale steps.
// Moving right keeps (a, b] semantics: a hit at the left endpoint stays
// excluded, a hit at the right endpoint stays included.
double nudge_off_root(const Polynomial& head, double x) {
  double step = std::max(std::fabs(x), 1.0) *
                std::numeric_limits<double>::epsilon();
  while (chain_eval(head, x) == 0.0) {
    x += step;
    step *= 2.0;
  }
  return x;
}

void require_tol(double tol) {
  if (!(tol > 0.0) || tol > 1e-6) {
    throw std::invalid_argument("tol must lie in (0, 1e-6]");
  }
}

// Magnitude-sum radius valid for every real root regardless of signs.
double magnitude_radius(const Polynomial& p) {
  double sum = 0.0;
  for (int j = 0; j < p.degree(); ++j) {
    sum += std::fabs(p.coeff(j));
  }
  return std::max(1.0, sum / std::fabs(p.leading()));
}

// One side of the search interval: the Cauchy bound when the polynomial
// has mixed signs, otherwise the magnitude-sum fallback.
double side_radius(const Polynomial& p) {
  try {
    return cauchy_bound(p);
  } catch (const AllSameSignError&) {
    return magnitude_radius(p);
  }
}

struct Isolator {
  const std::vector<Polynomial>& chain;
  std::vector<RootInterval> found;

  void split(double a, int va, double b, int vb, int depth) {
    const int count = va - vb;
    if (count <= 0) {
      return;
    }
    if (count == 1) {
      found.push_back({a, b});
      return;
    }
    if (depth > kMaxDepth) {
      throw BisectionDepthError{};
    }
    double mid = nudge_off_root(chain.front(), 0.5 * (a + b));
    if (!(mid > a && mid < b)) {
      throw BisectionDepthError{};  // interval no longer splittable
    }
    const int vm = sign_variations(chain, mid);
    split(a, va, mid, vm, depth + 1);
    split(mid, vm, b, vb, depth + 1);
  }
};

double refine_root(const Polynomial& square_free, RootInterval iv, double tol) {
  double a = iv.lo;
  double b = iv.hi;
  double fa = chain_eval(square_free, a);
  // One simple root inside, endpoints off roots: signs must differ.
  for (int i = 0; i < kMaxDepth && b - a > tol * std::max(1.0, 0.5 * std::fabs(a + b)); ++i) {
    const double mid = 0.5 * (a + b);
    const double fm = chain_eval(square_free, mid);
    if (fm == 0.0) {
      return mid;
    }
    if ((fa < 0.0) == (fm < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() == 0) {
    return p;
  }
  std::vector<double> monic = p.coeffs();
  for (double& c : monic) {
    c /= p.leading();
  }
  if (p.degree() == 1) {
    return Polynomial(std::move(monic));
  }
  const Polynomial d = derivative(p);
  const std::vector<double> g = poly_gcd(p.coeffs(), d.coeffs());
  if (g.size() <= 1) {
    return Polynomial(std::move(monic));
  }
  std::vector<double> sf = quotient_of(p.coeffs(), g);
  trim_leading_zeros(sf);
  const double lead = sf.back();
  for (double& c : sf) {
    c /= lead;
  }
  return Polynomial(std::move(sf));
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  if (p.degree() < 1) {
    throw std::invalid_argument("Sturm sequence needs degree >= 1");
  }
  std::vector<Polynomial> chain;
  chain.push_back(square_free_part(p));
  chain.push_back(derivative(chain.front()));
  while (chain.back().degree() >= 1) {
    std::vector<double> r = remainder_of(chain[chain.size() - 2].coeffs(),
                                         chain.back().coeffs());
    for (double& x : r) {
      x = -x;
    }
    const double norm = inf_norm(r);
    if (norm == 0.0) {
      break;  // exact common factor survived; chain ends early
    }
    // Rescale to unit max coefficient: positive scaling keeps every sign
    // count intact and stops magnitude growth.
    for (double& x : r) {
      x /= norm;
    }
    // Leading coefficients below rounding noise are division artifacts.
    while (r.size() > 1 && std::fabs(r.back()) < 1e-13) {
      r.pop_back();
    }
    trim_leading_zeros(r);
    if (r.empty()) {
      break;
    }
    chain.emplace_back(std::move(r));
  }
  return chain;
}

namespace {

std::pair<double, double> search_interval_of(const Polynomial& p) {
  const double right = side_radius(normalize(p.coeffs()).poly) + 1.0;
  const double left =
      -(side_radius(normalize(reflect(p).coeffs()).poly) + 1.0);
  return {left, right};
}

std::vector<RootInterval> isolate_with_chain(
    const Polynomial& p, const std::vector<Polynomial>& chain) {
  const auto [left, right] = search_interval_of(p);
  Isolator iso{chain, {}};
  iso.split(left, sign_variations(chain, left), right,
            sign_variations(chain, right), 0);
  return std::move(iso.found);
}

}  // namespace

int count_real_roots(const Polynomial& p, double a, double b) {
  if (!(a < b)) {
    throw std::invalid_argument("count_real_roots needs a < b");
  }
  const std::vector<Polynomial> chain = sturm_sequence(p);
  a = nudge_off_root(chain.front(), a);
  b = nudge_off_root(chain.front(), b);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
  if (p.degree() < 1) {
    throw std::invalid_argument("root isolation needs degree >= 1");
  }
  return isolate_with_chain(p, sturm_sequence(p));
}

std::optional<double> max_real_root(const Polynomial& p, double tol) {
  require_tol(tol);
  const std::vector<Polynomial> chain = sturm_sequence(p);
  const std::vector<RootInterval> intervals = isolate_with_chain(p, chain);
  if (intervals.empty()) {
    return std::nullopt;
  }
  return refine_root(chain.front(), intervals.back(), tol);
}

OracleResult find_real_roots(const Polynomial& p, double tol) {
  require_tol(tol);
  OracleResult result;
  const std::vector<Polynomial> chain = sturm_sequence(p);
  result.search_interval = search_interval_of(p);
  for (const RootInterval& iv : isolate_with_chain(p, chain)) {
    result.roots.push_back(refine_root(chain.front(), iv, tol));
  }
  if (!result.roots.empty()) {
    result.max_real_root = result.roots.back();
  }
  return result;
}

}  // namespace rootbounds
