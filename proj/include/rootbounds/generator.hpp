#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "rootbounds/polynomial.hpp"

namespace rootbounds {

/// xoshiro256++ with splitmix64 seeding. Fixed algorithm so corpora are
/// reproducible bit-for-bit across platforms; std::uniform_* distributions
/// are deliberately avoided for the same reason.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);

  std::uint64_t next();

  /// [0, 1) with 53 random bits.
  double uniform01();
  double uniform(double lo, double hi);
  /// Inclusive range, unbiased via rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t s_[4];
};

struct UniformRealDist {
  double lo = -1.0;
  double hi = 1.0;
};

struct UniformIntDist {
  int lo = -10;
  int hi = 10;
};

struct PlantedRootsDist {
  double root_lo = -5.0;
  double root_hi = 5.0;
  int degree = 4;
  /// Minimum pairwise distance between planted roots; draws violating it
  /// are rejected.
  double min_gap = 0.0;
};

using CoefficientDistribution =
    std::variant<UniformRealDist, UniformIntDist, PlantedRootsDist>;

struct GeneratorSpec {
  int degree_lo = 3;
  int degree_hi = 10;
  CoefficientDistribution dist = UniformIntDist{};
  bool require_mixed_signs = true;
  int count = 1;
  std::uint64_t seed = 1;
};

/// Monic polynomial with the given real roots.
Polynomial poly_from_roots(const std::vector<double>& roots);

/// Deterministic corpus of normalized polynomials: same spec, same corpus,
/// on any platform. Draws that lose degree under normalization (or fail the
/// mixed-signs requirement when set) are rejected and redrawn. Throws
/// GeneratorSpecError for invalid specs.
std::vector<Polynomial> gen_random(const GeneratorSpec& spec);

}  // namespace rootbounds
