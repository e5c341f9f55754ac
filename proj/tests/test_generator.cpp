#include <doctest.h>

#include "rootbounds/generator.hpp"

using namespace rootbounds;

TEST_CASE("poly_from_roots expands linear factors") {
  CHECK(poly_from_roots({1.0, 2.0}).coeffs() ==
        std::vector<double>{2.0, -3.0, 1.0});
  CHECK(poly_from_roots({0.5}).coeffs() == std::vector<double>{-0.5, 1.0});
  CHECK(poly_from_roots({}).coeffs() == std::vector<double>{1.0});
}

TEST_CASE("gen_random is deterministic per seed") {
  GeneratorSpec spec;
  spec.degree_lo = 3;
  spec.degree_hi = 3;
  spec.dist = UniformIntDist{-5, 5};
  spec.count = 3;
  spec.seed = 42;
  const auto a = gen_random(spec);
  const auto b = gen_random(spec);
  REQUIRE(a.size() == 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(a[i].degree() == 3);
  }

  spec.seed = 43;
  const auto c = gen_random(spec);
  bool all_equal = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    all_equal = all_equal && a[i] == c[i];
  }
  CHECK_FALSE(all_equal);
}

TEST_CASE("integer draws produce integer coefficients with mixed signs") {
  GeneratorSpec spec;
  spec.degree_lo = 2;
  spec.degree_hi = 8;
  spec.dist = UniformIntDist{-10, 10};
  spec.require_mixed_signs = true;
  spec.count = 100;
  spec.seed = 7;
  for (const Polynomial& p : gen_random(spec)) {
    CHECK(p.leading() > 0.0);
    CHECK(p.coeff(0) != 0.0);
    bool has_negative = false;
    for (double c : p.coeffs()) {
      CHECK(c == static_cast<double>(static_cast<long long>(c)));
      has_negative = has_negative || c < 0.0;
    }
    CHECK(has_negative);
  }
}

TEST_CASE("planted distribution yields the requested degree") {
  GeneratorSpec spec;
  spec.dist = PlantedRootsDist{-2.0, 2.0, 4, 0.0};
  spec.count = 5;
  spec.seed = 3;
  spec.require_mixed_signs = false;
  for (const Polynomial& p : gen_random(spec)) {
    CHECK(p.degree() == 4);
    CHECK(p.leading() == 1.0);
  }
}

TEST_CASE("invalid specs are rejected") {
  GeneratorSpec spec;
  spec.degree_lo = 0;
  CHECK_THROWS_AS(gen_random(spec), GeneratorSpecError);

  spec = GeneratorSpec{};
  spec.count = 0;
  CHECK_THROWS_AS(gen_random(spec), GeneratorSpecError);

  spec = GeneratorSpec{};
  spec.degree_hi = 101;
  CHECK_THROWS_AS(gen_random(spec), GeneratorSpecError);

  spec = GeneratorSpec{};
  spec.dist = UniformIntDist{0, 0};
  CHECK_THROWS_AS(gen_random(spec), GeneratorSpecError);

  spec = GeneratorSpec{};
  spec.dist = PlantedRootsDist{-1.0, 1.0, 10, 1.0};  // gaps cannot fit
  CHECK_THROWS_AS(gen_random(spec), GeneratorSpecError);

  // all-positive draws can never satisfy the mixed-signs requirement
  spec = GeneratorSpec{};
  spec.dist = UniformIntDist{1, 5};
  spec.require_mixed_signs = true;
  spec.count = 1;
  CHECK_THROWS_AS(gen_random(spec), GeneratorSpecError);
}

TEST_CASE("xoshiro stream is stable") {
  // Frozen prefix: regenerating it must never change across platforms or
  // refactors, or every seeded corpus silently shifts.
  Xoshiro256pp rng(1);
  const std::uint64_t a = rng.next();
  const std::uint64_t b = rng.next();
  Xoshiro256pp again(1);
  CHECK(again.next() == a);
  CHECK(again.next() == b);

  Xoshiro256pp other(2);
  CHECK(other.next() != a);

  const double u = Xoshiro256pp(5).uniform01();
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto v = Xoshiro256pp(i).uniform_int(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}
