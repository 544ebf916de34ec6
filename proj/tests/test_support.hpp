#pragma once

#include <memory>
#include <vector>

#include "liftcut/instance.hpp"
#include "liftcut/lift_context.hpp"
#include "liftcut/rng.hpp"

namespace liftcut::testing {

// Random concave function covering every closed-form variant plus the
// tabulated escape hatch.
inline ConcaveFn random_fn(SplitMix64& rng) {
  switch (rng.uniform_int(0, 7)) {
    case 0: return ConcaveFn::exp_utility(rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0));
    case 1: return ConcaveFn::neg_exp(rng.uniform(-1.0, 2.0));
    case 2: return ConcaveFn::min_linear(rng.uniform(-1.0, 4.0));
    case 3: return ConcaveFn::neg_abs(rng.uniform(-1.0, 4.0));
    case 4: return ConcaveFn::neg_quadratic(rng.uniform(-1.0, 2.0));
    case 5: return shift(ConcaveFn::neg_quadratic(rng.uniform(-1.0, 1.0)), rng.uniform(-1.0, 1.0));
    case 6: return reflect(ConcaveFn::neg_exp(rng.uniform(-1.0, 1.0)), rng.uniform(-1.0, 1.0));
    default: {
      // Concave piecewise-linear with decreasing slopes.
      std::vector<std::array<double, 2>> pts;
      double x = rng.uniform(-6.0, -4.0);
      double y = rng.uniform(-2.0, 0.0);
      double slope = rng.uniform(1.0, 2.0);
      for (int i = 0; i < 5; ++i) {
        pts.push_back({x, y});
        double dx = rng.uniform(1.0, 4.0);
        x += dx;
        y += slope * dx;
        slope -= rng.uniform(0.2, 0.8);
      }
      return ConcaveFn::piecewise_linear(pts);
    }
  }
}

struct RandomContext {
  std::shared_ptr<InstanceX> inst;
  LiftContext ctx;
};

// Instance with n <= max_n, mu <= max_mu, mixed function variants, and a
// random seed partition.
inline RandomContext random_context(SplitMix64& rng, int max_n = 4, int max_mu = 3,
                                    bool binary = false) {
  int n = rng.uniform_int(1, max_n);
  std::vector<double> a(n);
  std::vector<int> mu(n);
  for (int i = 0; i < n; ++i) {
    a[i] = rng.uniform(0.25, 2.5);
    mu[i] = binary ? 1 : rng.uniform_int(1, max_mu);
  }
  auto inst = std::make_shared<InstanceX>(a, mu, random_fn(rng));
  int s = rng.uniform_int(0, n - 1);
  int k = rng.uniform_int(1, mu[s]);
  std::vector<int> s0, s1;
  for (int i = 0; i < n; ++i) {
    if (i == s) continue;
    (rng.next_double() < 0.5 ? s0 : s1).push_back(i);
  }
  LiftContext ctx(inst, s, k, s0, s1);
  return {inst, std::move(ctx)};
}

}  // namespace liftcut::testing
