#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "liftcut/constants.hpp"
#include "liftcut/seed.hpp"
#include "test_support.hpp"

using namespace liftcut;

TEST_CASE("secant cut values") {
  Instance1D inst{1.0, 3, ConcaveFn::neg_quadratic(1.3)};
  Cut cut = seed_inequality(inst, 2);
  // w <= -0.4 (x - 2) - 0.49
  CHECK(cut.alpha[0] == doctest::Approx(-0.4).epsilon(1e-12));
  CHECK(cut.alpha0 + 2 * cut.alpha[0] == doctest::Approx(-0.49).epsilon(1e-12));

  // Tight at x = k-1 and x = k by construction.
  for (int k = 1; k <= 3; ++k) {
    Cut c = seed_inequality(inst, k);
    for (int x : {k - 1, k}) {
      double rhs = c.alpha0 + c.alpha[0] * x;
      CHECK(rhs == doctest::Approx(inst.g(inst.a * x)).epsilon(1e-12));
    }
  }

  Instance1D flat{1.0, 3, ConcaveFn::min_linear(1.5)};
  Cut c1 = seed_inequality(flat, 1);
  CHECK(c1.alpha[0] == 0.0);
  CHECK(c1.alpha0 == 0.0);

  CHECK_THROWS_AS(seed_inequality(inst, 0), std::invalid_argument);
  CHECK_THROWS_AS(seed_inequality(inst, 4), std::invalid_argument);
}

TEST_CASE("full one-variable hull") {
  Instance1D inst{1.0, 3, ConcaveFn::neg_quadratic(1.3)};
  auto cuts = hull_1d(inst);
  CHECK(cuts.size() == 5);  // 3 secants + 2 bounds
  CHECK(std::count_if(cuts.begin(), cuts.end(), [](const Cut& c) { return c.is_bound; }) == 2);

  Instance1D single{0.7, 1, ConcaveFn::neg_exp(0.0)};
  auto one = hull_1d(single);
  CHECK(one.size() == 3);
  // The single cut is the secant through x = 0 and x = 1.
  CHECK(one[0].alpha[0] ==
        doctest::Approx(single.g(single.a) - single.g(0.0)).epsilon(1e-12));
}

TEST_CASE("hull is exact at integer points") {
  // max w subject to all returned cuts at integer xbar equals g(a xbar).
  SplitMix64 rng(23);
  for (int rep = 0; rep < 60; ++rep) {
    Instance1D inst{rng.uniform(0.3, 2.0), rng.uniform_int(1, 4), testing::random_fn(rng)};
    auto cuts = hull_1d(inst);
    for (int x = 0; x <= inst.mu; ++x) {
      double best = HUGE_VAL;
      for (const Cut& c : cuts) {
        if (c.is_bound) continue;
        best = std::min(best, c.alpha0 + c.alpha[0] * x);
      }
      CHECK(best == doctest::Approx(inst.g(inst.a * x)).epsilon(1e-9));
    }
  }
}

TEST_CASE("each secant is valid across the box") {
  SplitMix64 rng(29);
  for (int rep = 0; rep < 60; ++rep) {
    Instance1D inst{rng.uniform(0.3, 2.0), rng.uniform_int(1, 5), testing::random_fn(rng)};
    for (int k = 1; k <= inst.mu; ++k) {
      Cut c = seed_inequality(inst, k);
      for (int x = 0; x <= inst.mu; ++x)
        CHECK(c.alpha0 + c.alpha[0] * x >= inst.g(inst.a * x) - kTol);
    }
  }
}
