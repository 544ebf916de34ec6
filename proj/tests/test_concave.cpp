#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "liftcut/concave.hpp"
#include "liftcut/constants.hpp"
#include "test_support.hpp"

using namespace liftcut;

TEST_CASE("closed-form evaluation") {
  CHECK(ConcaveFn::neg_quadratic(1.3)(2.0) == doctest::Approx(-0.49).epsilon(1e-12));
  CHECK(ConcaveFn::min_linear(1.5)(1.5) == 0.0);
  CHECK(ConcaveFn::neg_exp(3.0)(3.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(ConcaveFn::exp_utility(2.0, 1.0)(1.0) == doctest::Approx(0.0));
  CHECK(ConcaveFn::neg_abs(2.0)(-1.0) == doctest::Approx(-3.0));
}

TEST_CASE("shift and reflect") {
  // g(z) = f(z + 3) for f = -exp(-(z-3)) gives g(0) = -1.
  ConcaveFn g = shift(ConcaveFn::neg_exp(3.0), 3.0);
  CHECK(g(0.0) == doctest::Approx(-1.0).epsilon(1e-15));

  ConcaveFn f = ConcaveFn::neg_quadratic(0.7);
  for (double z : {-2.0, -0.5, 0.0, 1.25, 3.0}) {
    CHECK(shift(f, 0.0)(z) == f(z));
    CHECK(shift(ConcaveFn::min_linear(5.0), 2.0)(3.0) == 0.0);
  }

  CHECK(reflect(ConcaveFn::neg_quadratic(0.0), 0.0)(2.0) == doctest::Approx(-4.0));
  CHECK(reflect(ConcaveFn::min_linear(1.0), 1.0)(0.0) == 0.0);

  // Involution and composition are exact, not just approximate.
  SplitMix64 rng(7);
  for (int t = 0; t < 50; ++t) {
    ConcaveFn base = testing::random_fn(rng);
    double c = rng.uniform(-2.0, 2.0);
    ConcaveFn twice = reflect(reflect(base, c), c);
    double z = rng.uniform(-4.0, 4.0);
    CHECK(twice(z) == doctest::Approx(base(z)).epsilon(1e-12));
    double c1 = rng.uniform(-2.0, 2.0), c2 = rng.uniform(-2.0, 2.0);
    CHECK(reflect(shift(base, c1), c2)(z) == base(-z + c2 + c1));
  }
}

TEST_CASE("three-point concavity on random triples") {
  SplitMix64 rng(11);
  for (int rep = 0; rep < 8; ++rep) {
    ConcaveFn f = testing::random_fn(rng);
    for (int t = 0; t < 1250; ++t) {
      double z1 = rng.uniform(-8.0, 8.0);
      double z2 = rng.uniform(-8.0, 8.0);
      double z3 = rng.uniform(-8.0, 8.0);
      if (z1 > z2) std::swap(z1, z2);
      if (z2 > z3) std::swap(z2, z3);
      if (z1 > z2) std::swap(z1, z2);
      double lhs = (z3 - z2) * f(z1) + (z1 - z3) * f(z2) + (z2 - z1) * f(z3);
      CHECK(lhs <= kTol);
    }
  }
}

TEST_CASE("slope comparison is a theorem under its preconditions") {
  CHECK(check_slope(ConcaveFn::neg_exp(0.0), 0.0, 1.0, 1.0, 2.0));
  CHECK(check_slope(ConcaveFn::neg_quadratic(0.0), 0.0, 1.0, 2.0, 3.0));
  SplitMix64 rng(13);
  ConcaveFn f = testing::random_fn(rng);
  CHECK(check_slope(f, 0.5, 0.5, 2.0, 2.0));  // equal endpoints: both sides zero

  for (int t = 0; t < 2000; ++t) {
    ConcaveFn g = testing::random_fn(rng);
    double a1 = rng.uniform(-5.0, 5.0);
    double a2 = a1 + rng.uniform(0.0, 3.0);
    double b1 = a1 + rng.uniform(0.0, 3.0);
    double b2 = std::max(a2, b1) + rng.uniform(0.0, 3.0);
    CHECK(check_slope(g, a1, a2, b1, b2));
  }
  CHECK_THROWS_AS(check_slope(f, 1.0, 0.0, 2.0, 3.0), std::invalid_argument);
}

TEST_CASE("regrouped difference sums") {
  ConcaveFn any = ConcaveFn::neg_quadratic(0.3);
  CHECK(check_regrouped_sum(any, {{1.0, 0.0, 1.0}}, {{1.0, 1.0, 2.0}}));
  CHECK(check_regrouped_sum(ConcaveFn::neg_exp(0.0), {{2.0, 0.0, 1.0}}, {{1.0, 1.0, 3.0}}));
  CHECK(check_regrouped_sum(any, {}, {}));

  CHECK_THROWS_WITH_AS(check_regrouped_sum(any, {{-1.0, 0.0, 1.0}}, {{1.0, 1.0, 0.0}}),
                       doctest::Contains("weights"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(check_regrouped_sum(any, {{1.0, 0.0, 2.0}}, {{1.0, 1.0, 2.0}}),
                       doctest::Contains("balance"), std::invalid_argument);
  // Plus-side hi beyond minus-side hi.
  CHECK_THROWS_WITH_AS(check_regrouped_sum(any, {{1.0, 2.0, 3.0}}, {{1.0, 0.0, 1.0}}),
                       doctest::Contains("hi"), std::invalid_argument);
}

TEST_CASE("json round trip") {
  SplitMix64 rng(17);
  for (int t = 0; t < 40; ++t) {
    ConcaveFn f = testing::random_fn(rng);
    ConcaveFn g = ConcaveFn::from_json(f.to_json());
    for (int s = 0; s < 10; ++s) {
      double z = rng.uniform(-5.0, 5.0);
      CHECK(f(z) == g(z));  // bit-exact through the decimal encoding
    }
  }
}
