#include "rootbounds/generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rootbounds {

namespace {

constexpr int kMaxAttempts = 100000;

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& s : s_) {
    s = splitmix64(sm);
  }
}

std::uint64_t Xoshiro256pp::next() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256pp::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Xoshiro256pp::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

std::int64_t Xoshiro256pp::uniform_int(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = (~std::uint64_t{0} / span) * span;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

namespace {

// Double-double helpers so the expanded coefficients carry only the final
// rounding error, not the accumulation error of a plain recurrence. Root
// clusters otherwise shift the product's roots past what refinement can
// recover.
struct Dd {
  double hi = 0.0;
  double lo = 0.0;
};

Dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - bb) + (b - (s - bb))};
}

Dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

Dd dd_sub(Dd a, Dd b) {
  Dd s = two_sum(a.hi, -b.hi);
  s.lo += a.lo - b.lo;
  return two_sum(s.hi, s.lo);
}

Dd dd_mul(Dd a, double b) {
  Dd p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return two_sum(p.hi, p.lo);
}

}  // namespace

Polynomial poly_from_roots(const std::vector<double>& roots) {
  std::vector<Dd> coeffs{{1.0, 0.0}};
  for (double r : roots) {
    coeffs.push_back({0.0, 0.0});
    for (std::size_t j = coeffs.size() - 1; j >= 1; --j) {
      coeffs[j] = dd_sub(coeffs[j - 1], dd_mul(coeffs[j], r));
    }
    coeffs[0] = dd_mul(coeffs[0], -r);
  }
  std::vector<double> rounded(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    rounded[j] = coeffs[j].hi + coeffs[j].lo;
  }
  return Polynomial(std::move(rounded));
}

namespace {

void validate(const GeneratorSpec& spec) {
  if (spec.count < 1) {
    throw GeneratorSpecError("count must be at least 1");
  }
  if (spec.degree_lo < 1 || spec.degree_hi > 100 ||
      spec.degree_lo > spec.degree_hi) {
    throw GeneratorSpecError("degree range must sit inside [1, 100]");
  }
  if (const auto* u = std::get_if<UniformRealDist>(&spec.dist)) {
    if (!(u->lo < u->hi)) {
      throw GeneratorSpecError("uniform range must be non-degenerate");
    }
  } else if (const auto* i = std::get_if<UniformIntDist>(&spec.dist)) {
    if (i->lo > i->hi || (i->lo == 0 && i->hi == 0)) {
      throw GeneratorSpecError("integer range must contain a nonzero value");
    }
  } else {
    const auto& pr = std::get<PlantedRootsDist>(spec.dist);
    if (pr.degree < 1 || pr.degree > 100) {
      throw GeneratorSpecError("planted degree must sit inside [1, 100]");
    }
    if (!(pr.root_lo < pr.root_hi)) {
      throw GeneratorSpecError("root range must be non-degenerate");
    }
    if (pr.min_gap < 0.0 ||
        pr.min_gap * (pr.degree - 1) > pr.root_hi - pr.root_lo) {
      throw GeneratorSpecError("min_gap is infeasible for the root range");
    }
  }
}

bool draw_coefficients(const GeneratorSpec& spec, Xoshiro256pp& rng,
                       std::vector<double>& out) {
  if (const auto* u = std::get_if<UniformRealDist>(&spec.dist)) {
    const int degree =
        static_cast<int>(rng.uniform_int(spec.degree_lo, spec.degree_hi));
    out.resize(static_cast<std::size_t>(degree) + 1);
    for (double& c : out) {
      c = rng.uniform(u->lo, u->hi);
    }
    return out.back() != 0.0;
  }
  if (const auto* i = std::get_if<UniformIntDist>(&spec.dist)) {
    const int degree =
        static_cast<int>(rng.uniform_int(spec.degree_lo, spec.degree_hi));
    out.resize(static_cast<std::size_t>(degree) + 1);
    for (double& c : out) {
      c = static_cast<double>(rng.uniform_int(i->lo, i->hi));
    }
    return out.back() != 0.0;
  }
  const auto& pr = std::get<PlantedRootsDist>(spec.dist);
  std::vector<double> roots(static_cast<std::size_t>(pr.degree));
  for (double& r : roots) {
    r = rng.uniform(pr.root_lo, pr.root_hi);
  }
  std::sort(roots.begin(), roots.end());
  for (std::size_t j = 1; j < roots.size(); ++j) {
    if (roots[j] - roots[j - 1] < pr.min_gap) {
      return false;
    }
  }
  out = poly_from_roots(roots).coeffs();
  return true;
}

}  // namespace

std::vector<Polynomial> gen_random(const GeneratorSpec& spec) {
  validate(spec);
  Xoshiro256pp rng(spec.seed);
  std::vector<Polynomial> corpus;
  corpus.reserve(static_cast<std::size_t>(spec.count));
  std::vector<double> raw;
  while (corpus.size() < static_cast<std::size_t>(spec.count)) {
    bool accepted = false;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      if (!draw_coefficients(spec, rng, raw)) {
        continue;
      }
      const int drawn_degree = static_cast<int>(raw.size()) - 1;
      NormalizedPolynomial norm = normalize(raw);
      if (norm.poly.degree() != drawn_degree) {
        continue;  // normalization stripped a zero root; keep degrees exact
      }
      if (spec.require_mixed_signs &&
          sign_split(norm.poly).negative_count == 0) {
        continue;
      }
      corpus.push_back(std::move(norm.poly));
      accepted = true;
      break;
    }
    if (!accepted) {
      throw GeneratorSpecError("could not satisfy the spec after " +
                               std::to_string(kMaxAttempts) + " attempts");
    }
  }
  return corpus;
}

}  // namespace rootbounds
