#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "liftcut/constants.hpp"
#include "liftcut/lifting.hpp"
#include "liftcut/polyoracle.hpp"
#include "test_support.hpp"

using namespace liftcut;

namespace {

// Binary four-variable instance with weights (1,2,2,3) and f(z) = -e^{-(z-3)},
// partitioned as s = 0, S0 = {1,2}, S1 = {3}, k = 1, so g(z) = -e^{-z}.
testing::RandomContext example_small() {
  auto inst = std::make_shared<InstanceX>(std::vector<double>{1, 2, 2, 3},
                                          std::vector<int>{1, 1, 1, 1},
                                          ConcaveFn::neg_exp(3.0));
  LiftContext ctx(inst, 0, 1, {1, 2}, {3});
  return {inst, std::move(ctx)};
}

// Same shape with the heavy last weight 6, g(z) = -e^{-z}.
testing::RandomContext example_heavy() {
  auto inst = std::make_shared<InstanceX>(std::vector<double>{1, 2, 2, 6},
                                          std::vector<int>{1, 1, 1, 1},
                                          ConcaveFn::neg_exp(6.0));
  LiftContext ctx(inst, 0, 1, {1, 2}, {3});
  return {inst, std::move(ctx)};
}

std::vector<double> delta_grid(double lo, double hi, int count) {
  std::vector<double> g;
  for (int i = 0; i < count; ++i) g.push_back(lo + (hi - lo) * i / (count - 1));
  return g;
}

}  // namespace

TEST_CASE("first-phase values on the small example") {
  auto [inst, ctx] = example_small();
  double e1 = std::exp(-1.0), e2 = std::exp(-2.0);
  CHECK(zeta(ctx, 1.0) == doctest::Approx(1 - e1).epsilon(1e-12));
  CHECK(zeta(ctx, 2.0) + zeta(ctx, -1.0) == doctest::Approx(e1 - e2).epsilon(1e-12));
  CHECK(zeta(ctx, 2.0) + zeta(ctx, -1.0) < zeta(ctx, 1.0));  // not subadditive across signs
  CHECK(zeta(ctx, 0.0) == 0.0);
  CHECK(z_approx(ctx, 2.0) == doctest::Approx(2 * (1 - e1)).epsilon(1e-12));
  CHECK(z_approx(ctx, 0.0) == 0.0);
}

TEST_CASE("first-phase values against enumeration") {
  SplitMix64 rng(31);
  for (int rep = 0; rep < 80; ++rep) {
    auto [inst, ctx] = testing::random_context(rng);
    double span = 0.0;
    for (int i = 0; i < inst->n(); ++i) span += inst->a(i) * inst->mu(i);
    for (double d : delta_grid(-span - 1.0, span + 1.0, 21)) {
      CHECK(zeta(ctx, d) ==
            doctest::Approx(lift_bruteforce(ctx, d, LiftKind::Zeta)).epsilon(1e-9));
      CHECK(z_approx(ctx, d) >= zeta(ctx, d) - kTol);
    }
    // Equality window of the relaxation.
    double lo = (ctx.k() - ctx.mu_s() - 1) * ctx.a_s();
    double hi = ctx.k() * ctx.a_s();
    for (double d : delta_grid(lo, hi, 9))
      CHECK(z_approx(ctx, d) == doctest::Approx(zeta(ctx, d)).epsilon(1e-12));
  }
}

TEST_CASE("optimal seed count for a fixed load") {
  SplitMix64 rng(37);
  for (int rep = 0; rep < 200; ++rep) {
    auto [inst, ctx] = testing::random_context(rng);
    double a_lambda = rng.uniform(0.0, 6.0);
    double delta = -rng.uniform(0.0, 8.0);
    int got = gamma_opt(ctx, a_lambda, delta);
    // Brute-force argmax of the restricted objective over [0, mu_s].
    double best = -HUGE_VAL;
    int best_gamma = 0;
    for (int gam = 0; gam <= ctx.mu_s(); ++gam) {
      double val = ctx.g()(delta + a_lambda + gam * ctx.a_s()) +
                   (ctx.k() - gam) * ctx.rho() - ctx.g_k_as();
      if (val > best + kTol) {
        best = val;
        best_gamma = gam;
      }
    }
    double got_val = ctx.g()(delta + a_lambda + got * ctx.a_s()) +
                     (ctx.k() - got) * ctx.rho() - ctx.g_k_as();
    CHECK(got_val == doctest::Approx(best).epsilon(1e-9));
    (void)best_gamma;
    // Boundary clauses.
    if (gamma_opt(ctx, a_lambda, delta) >= 1)
      CHECK(delta + a_lambda + got * ctx.a_s() <= ctx.k() * ctx.a_s() + 1e-9);
    if (got <= ctx.mu_s() - 1)
      CHECK(delta + a_lambda + got * ctx.a_s() > (ctx.k() - 1) * ctx.a_s() - 1e-9);
  }
  auto [inst, ctx] = testing::random_context(rng);
  double al = 1.0;
  CHECK(gamma_opt(ctx, al, (ctx.k() - ctx.mu_s() - 1) * ctx.a_s() - al - 0.5) == ctx.mu_s());
  CHECK(gamma_opt(ctx, al, 0.0) == (ctx.k() * ctx.a_s() - al < 0 ? 0 : gamma_opt(ctx, al, 0.0)));
}

TEST_CASE("second-phase example with a heavy fixed variable") {
  auto [inst, ctx] = example_heavy();
  auto g = [](double z) { return -std::exp(-z); };
  double z2 = zeta(ctx, 2.0);

  // Closed form on the printed windows.
  CHECK(eta_lower(ctx, -1.0) == doctest::Approx(g(1.0) - z2 - g(0.0)).epsilon(1e-12));
  CHECK(eta_lower(ctx, -3.0) == doctest::Approx(g(1.0) - 2 * z2 - g(0.0)).epsilon(1e-12));
  CHECK(eta_lower(ctx, -6.0) == doctest::Approx(g(-1.0) - 2 * z2 - g(1.0)).epsilon(1e-12));
  CHECK(eta_lower(ctx, 0.0) == 0.0);
  CHECK(eta_upper(ctx, 0.0) == 0.0);

  // The S0 here equals its large subset, so the lower bound is exact.
  CHECK(ctx.s0_all_large());
  CHECK(eta_exact(ctx, -6.0).has_value());

  double gap = eta_upper(ctx, -6.0) - *eta_exact(ctx, -6.0);
  CHECK(gap == doctest::Approx(std::exp(1.0) + std::exp(-1.0) - 2.0).epsilon(1e-12));
}

TEST_CASE("second-phase closed forms against enumeration") {
  SplitMix64 rng(41);
  int exact_seen = 0;
  for (int rep = 0; rep < 60; ++rep) {
    auto [inst, ctx] = testing::random_context(rng);
    double units_span = ctx.s0plus().prefix.back() + (ctx.mu_s() + 3) * ctx.a_s() + 1.0;
    for (double d : delta_grid(-units_span, 0.0, 13)) {
      double lo = eta_lower(ctx, d);
      double up = eta_upper(ctx, d);
      double exact = lift_bruteforce(ctx, d, LiftKind::Eta);
      double relaxed = lift_bruteforce(ctx, d, LiftKind::EtaRelaxed);
      CHECK(lo <= exact + 1e-9);
      CHECK(exact <= up + 1e-9);
      CHECK(up == doctest::Approx(relaxed).epsilon(1e-8));
      if (auto ex = eta_exact(ctx, d)) {
        CHECK(*ex == doctest::Approx(exact).epsilon(1e-8));
        ++exact_seen;
      }
      // Equality window of the two bounds.
      double window_lo = (ctx.k() - ctx.mu_s() - 1) * ctx.a_s() - ctx.s0plus().prefix.back();
      if (d >= window_lo) CHECK(lo == doctest::Approx(up).epsilon(1e-9));
    }
  }
  CHECK(exact_seen > 100);
}

TEST_CASE("exact second phase availability") {
  SplitMix64 rng(43);
  int unavailable = 0;
  for (int rep = 0; rep < 200; ++rep) {
    auto [inst, ctx] = testing::random_context(rng);
    auto v = eta_exact(ctx, -1.0);
    if (ctx.s0_all_large() || ctx.k() == 1) {
      CHECK(v.has_value());
    } else {
      CHECK(!v.has_value());
      ++unavailable;
    }
    if (ctx.s0_all_large()) CHECK(*v == doctest::Approx(eta_lower(ctx, -1.0)).epsilon(1e-12));
  }
  CHECK(unavailable > 5);
}

TEST_CASE("reversed-order lifting against the complement pipeline") {
  SplitMix64 rng(47);
  for (int rep = 0; rep < 60; ++rep) {
    auto [inst, ctx] = testing::random_context(rng);
    LiftContext comp = ctx.complemented();
    double span = ctx.s1plus().prefix.back() + (ctx.mu_s() + 3) * ctx.a_s() + 1.0;
    for (double d : delta_grid(0.0, span, 13)) {
      CHECK(phi_upper(ctx, d) == doctest::Approx(eta_upper(comp, -d)).epsilon(1e-12));
      CHECK(std::fabs(phi_upper(ctx, 0.0)) <= 1e-12);
      CHECK(phi_upper(ctx, d) >= lift_bruteforce(ctx, d, LiftKind::Phi) - 1e-9);
      if (auto ex = phi_exact(ctx, d)) {
        CHECK(*ex == doctest::Approx(lift_bruteforce(ctx, d, LiftKind::Phi)).epsilon(1e-8));
        CHECK(*ex <= phi_upper(ctx, d) + 1e-9);
      }
    }
    if (ctx.s1_all_large()) {
      double bound = ctx.s1plus().prefix.back() + ctx.k() * ctx.a_s();
      for (double d : delta_grid(0.0, bound - 1e-6, 7))
        CHECK(*phi_exact(ctx, d) == doctest::Approx(phi_upper(ctx, d)).epsilon(1e-9));
    }
  }
}

TEST_CASE("first-phase reflection identity") {
  SplitMix64 rng(53);
  for (int rep = 0; rep < 60; ++rep) {
    auto [inst, ctx] = testing::random_context(rng);
    LiftContext comp = ctx.complemented();
    for (double d : delta_grid(-8.0, 8.0, 17))
      CHECK(zeta(comp, d) == doctest::Approx(zeta(ctx, -d)).epsilon(1e-10));
  }
}

TEST_CASE("optimal prefix matches subset enumeration") {
  SplitMix64 rng(59);
  for (int rep = 0; rep < 50; ++rep) {
    auto [inst, ctx] = testing::random_context(rng, 4, 2);
    const UnitArray& u = ctx.s0plus();
    if (u.units() == 0 || u.units() > 10) continue;
    double span = u.prefix.back() + ctx.mu_s() * ctx.a_s() + 1.0;
    for (double d : delta_grid(-span, 0.0, 9)) {
      int t = opt_prefix(ctx, d);
      auto value_of = [&](unsigned mask) {
        double load = 0.0, zsum = 0.0;
        for (int p = 0; p < u.units(); ++p)
          if (mask & (1u << p)) {
            load += u.value[p];
            zsum += u.lift_prefix[p + 1] - u.lift_prefix[p];
          }
        int gam = gamma_opt(ctx, load, d);
        return ctx.g()(d + load + gam * ctx.a_s()) - zsum + (ctx.k() - gam) * ctx.rho() -
               ctx.g_k_as();
      };
      double best = -HUGE_VAL;
      for (unsigned mask = 0; mask < (1u << u.units()); ++mask)
        best = std::max(best, value_of(mask));
      unsigned prefix_mask = (t == 0) ? 0u : ((1u << t) - 1);
      CHECK(value_of(prefix_mask) == doctest::Approx(best).epsilon(1e-9));
    }
    // Boundary clauses of the prefix rule.
    if (u.units() > 0) {
      CHECK(opt_prefix(ctx, 0.0) == 1);
      CHECK(opt_prefix(ctx, -u.prefix.back() - 1.0) == u.units());
    }
  }
}

TEST_CASE("subadditivity spot checks") {
  SplitMix64 rng(61);
  for (int rep = 0; rep < 25; ++rep) {
    auto [inst, ctx] = testing::random_context(rng);
    for (int t = 0; t < 400; ++t) {
      double d1 = rng.uniform(-8.0, 8.0);
      double d2 = rng.uniform(-8.0, 8.0);
      CHECK(z_approx(ctx, d1) + z_approx(ctx, d2) >= z_approx(ctx, d1 + d2) - kTol);
      double p1 = std::fabs(d1), p2 = std::fabs(d2);
      CHECK(zeta(ctx, p1) + zeta(ctx, p2) >= zeta(ctx, p1 + p2) - kTol);
      CHECK(zeta(ctx, -p1) + zeta(ctx, -p2) >= zeta(ctx, -p1 - p2) - kTol);
      CHECK(eta_lower(ctx, -p1) + eta_lower(ctx, -p2) >= eta_lower(ctx, -p1 - p2) - kTol);
      CHECK(eta_upper(ctx, -p1) + eta_upper(ctx, -p2) >= eta_upper(ctx, -p1 - p2) - kTol);
    }
  }
}

TEST_CASE("continuity at breakpoints") {
  SplitMix64 rng(67);
  for (int rep = 0; rep < 40; ++rep) {
    auto [inst, ctx] = testing::random_context(rng);
    // A branch mis-tile shows up as an O(1) jump: the one-sided difference
    // would not shrink with the step size.
    auto two_sided = [&](auto&& fn, double at) {
      double mid = fn(at);
      for (int sgn : {-1, 1}) {
        double d1 = std::fabs(fn(at + sgn * 1e-5) - mid);
        double d2 = std::fabs(fn(at + sgn * 1e-9) - mid);
        CHECK(d2 <= d1 / 100 + 1e-9);
      }
    };
    for (int ell = ctx.k() - ctx.mu_s() - 1; ell <= ctx.k(); ++ell) {
      two_sided([&](double d) { return zeta(ctx, d); }, ell * ctx.a_s());
      two_sided([&](double d) { return z_approx(ctx, d); }, ell * ctx.a_s());
    }
    const UnitArray& u = ctx.s0plus();
    for (int p = 1; p <= u.units(); ++p) {
      two_sided([&](double d) { return eta_lower(ctx, std::min(d, 0.0)); }, -u.prefix[p]);
      two_sided([&](double d) { return eta_upper(ctx, std::min(d, 0.0)); }, -u.prefix[p]);
    }
    const UnitArray& u1 = ctx.s1plus();
    for (int p = 1; p <= u1.units(); ++p)
      two_sided([&](double d) { return phi_upper(ctx, std::max(d, 0.0)); }, u1.prefix[p]);
  }
}
