#include "liftcut/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "liftcut/constants.hpp"

namespace liftcut {

double snapped_floor_div(double delta, double a) {
  double d = delta + kBranchSnap * std::max(1.0, std::fabs(delta));
  return std::floor(d / a);
}

namespace {

double snap_scale(double v) { return kBranchSnap * std::max(1.0, std::fabs(v)); }

void require_nonpositive(double delta, const char* who) {
  if (delta > snap_scale(delta)) throw std::invalid_argument(std::string(who) + ": delta must be <= 0");
}

void require_nonnegative(double delta, const char* who) {
  if (delta < -snap_scale(delta)) throw std::invalid_argument(std::string(who) + ": delta must be >= 0");
}

// Unit p covering delta in (-A_p, -A_{p-1}]; returns units+1 for delta <= -A_last.
int locate_right_closed(const UnitArray& u, double delta) {
  for (int p = 1; p <= u.units(); ++p) {
    if (delta > -u.prefix[p] + snap_scale(u.prefix[p])) return p;
  }
  return u.units() + 1;
}

// Unit p covering delta in [A_{p-1}, A_p); returns units+1 for delta >= A_last.
int locate_left_closed(const UnitArray& u, double delta) {
  for (int p = 1; p <= u.units(); ++p) {
    if (delta < u.prefix[p] - snap_scale(u.prefix[p])) return p;
  }
  return u.units() + 1;
}

// Shared closed form behind eta_lower / eta_upper; `cap` limits the tail
// branch index (mu_s for the bounded problem, none for the relaxation).
double eta_closed_form(const LiftContext& ctx, double delta, bool capped) {
  require_nonpositive(delta, "eta");
  delta = std::min(delta, 0.0);
  const UnitArray& u = ctx.s0plus();
  const double as = ctx.a_s();
  const int k = ctx.k();

  if (u.units() == 0) return capped ? zeta(ctx, delta) : z_approx(ctx, delta);

  int p = locate_right_closed(u, delta);
  if (p <= u.units()) {
    double A = u.prefix[p];
    if (delta > k * as - A + snap_scale(k * as - A)) {
      return ctx.g()(delta + A) - u.lift_prefix[p] + k * ctx.rho() - ctx.g_k_as();
    }
    double ell = snapped_floor_div(k * as - A - delta, as);
    ell = std::clamp(ell, 0.0, static_cast<double>(k - 1));
    return ctx.g()(delta + A + ell * as) - u.lift_prefix[p] + (k - ell) * ctx.rho() -
           ctx.g_k_as();
  }

  double A = u.prefix[u.units()];
  double ell = std::max(snapped_floor_div(k * as - A - delta, as), static_cast<double>(k));
  if (capped) ell = std::min(ell, static_cast<double>(ctx.mu_s()));
  return ctx.g()(delta + A + ell * as) - u.lift_prefix[u.units()] + (k - ell) * ctx.rho() -
         ctx.g_k_as();
}

// Shared closed form behind phi_upper / the large-S1 exact case.
double phi_closed_form(const LiftContext& ctx, double delta, bool capped) {
  require_nonnegative(delta, "phi");
  delta = std::max(delta, 0.0);
  const UnitArray& u = ctx.s1plus();
  const double as = ctx.a_s();
  const int k = ctx.k();
  const int mus = ctx.mu_s();

  if (u.units() == 0) {
    // Empty large subset: the relaxation collapses to the unbounded
    // single-variable problem, and the capped variant is only requested
    // when S1 itself is empty, where the bounded problem is the seed one.
    return capped ? zeta(ctx, delta) : z_approx(ctx, delta);
  }

  int p = locate_left_closed(u, delta);
  if (p <= u.units()) {
    double A = u.prefix[p];
    double case1_end = A + (k - mus - 1) * as;
    if (delta < case1_end - snap_scale(case1_end)) {
      return ctx.g()(delta + mus * as - A) - u.lift_prefix[p] + (k - mus) * ctx.rho() -
             ctx.g_k_as();
    }
    double ell = snapped_floor_div(delta - A - (k - mus - 1) * as, as);
    ell = std::clamp(ell, 0.0, static_cast<double>(mus - k));
    return ctx.g()(delta + (mus - ell) * as - A) - u.lift_prefix[p] +
           (k - mus + ell) * ctx.rho() - ctx.g_k_as();
  }

  double A = u.prefix[u.units()];
  double zsum = u.lift_prefix[u.units()];
  double ell = std::max(snapped_floor_div(delta - A - (k - mus - 1) * as, as),
                        static_cast<double>(mus - k + 1));
  if (capped && ell > mus) {
    return ctx.g()(delta - A) - zsum + k * ctx.rho() - ctx.g_k_as();
  }
  return ctx.g()(delta + (mus - ell) * as - A) - zsum + (k - mus + ell) * ctx.rho() -
         ctx.g_k_as();
}

}  // namespace

double zeta(const LiftContext& ctx, double delta) {
  double ell = snapped_floor_div(delta, ctx.a_s());
  ell = std::max(ell, static_cast<double>(ctx.k() - ctx.mu_s() - 1));
  ell = std::min(ell, static_cast<double>(ctx.k() - 1));
  return ctx.g()(delta + (ctx.k() - ell - 1) * ctx.a_s()) + (ell + 1) * ctx.rho() -
         ctx.g_k_as();
}

double z_approx(const LiftContext& ctx, double delta) {
  double ell = snapped_floor_div(delta, ctx.a_s());
  return ctx.g()(delta + (ctx.k() - ell - 1) * ctx.a_s()) + (ell + 1) * ctx.rho() -
         ctx.g_k_as();
}

int gamma_opt(const LiftContext& ctx, double a_lambda, double delta) {
  require_nonpositive(delta, "gamma_opt");
  if (a_lambda < 0.0) throw std::invalid_argument("gamma_opt: a_lambda must be >= 0");
  double ell = snapped_floor_div(ctx.k() * ctx.a_s() - a_lambda - delta, ctx.a_s());
  ell = std::clamp(ell, 0.0, static_cast<double>(ctx.mu_s()));
  return static_cast<int>(ell);
}

int opt_prefix(const LiftContext& ctx, double delta) {
  require_nonpositive(delta, "opt_prefix");
  const UnitArray& u = ctx.s0plus();
  int p = locate_right_closed(u, delta);
  return std::min(p, u.units());
}

double eta_lower(const LiftContext& ctx, double delta) { return eta_closed_form(ctx, delta, true); }

double eta_upper(const LiftContext& ctx, double delta) {
  return eta_closed_form(ctx, delta, false);
}

std::optional<double> eta_exact(const LiftContext& ctx, double delta) {
  require_nonpositive(delta, "eta_exact");
  if (ctx.s0_all_large()) return eta_lower(ctx, delta);
  if (ctx.k() == 1) {
    // Re-anchor the seed at the smallest weight among S0 + s; the large
    // subset of the re-anchored context is then all of its S0, where the
    // closed form is exact.
    const InstanceX& x = ctx.instance();
    int sbar = ctx.s();
    for (int i : ctx.s0())
      if (x.a(i) < x.a(sbar) || (x.a(i) == x.a(sbar) && i < sbar)) sbar = i;
    std::vector<int> s0bar;
    for (int i : ctx.s0())
      if (i != sbar) s0bar.push_back(i);
    if (sbar != ctx.s()) s0bar.push_back(ctx.s());
    LiftContext re(ctx.instance_ptr(), sbar, 1, std::move(s0bar), ctx.s1());
    return eta_lower(re, delta);
  }
  return std::nullopt;
}

double phi_upper(const LiftContext& ctx, double delta) {
  return phi_closed_form(ctx, delta, false);
}

std::optional<double> phi_exact(const LiftContext& ctx, double delta) {
  require_nonnegative(delta, "phi_exact");
  if (ctx.s1_all_large()) return phi_closed_form(ctx, delta, true);
  if (ctx.k() != ctx.mu_s()) return std::nullopt;

  // k == mu_s: evaluate over the unit expansion of S1 + s, sorted by weight
  // descending (ties by index), with the original context's first-phase
  // values at the negated weights.
  delta = std::max(delta, 0.0);
  const InstanceX& x = ctx.instance();
  std::vector<int> items = ctx.s1();
  items.push_back(ctx.s());
  std::sort(items.begin(), items.end(), [&](int i, int j) {
    if (x.a(i) != x.a(j)) return x.a(i) > x.a(j);
    return i < j;
  });
  double g_mus_as = ctx.g()(ctx.mu_s() * ctx.a_s());
  double prefix = 0.0, zsum = 0.0;
  for (int i : items) {
    for (int q = 0; q < x.mu(i); ++q) {
      double hi = prefix + x.a(i);
      if (delta < hi - snap_scale(hi)) {
        return ctx.g()(delta + ctx.mu_s() * ctx.a_s() - hi) - (zsum + zeta(ctx, -x.a(i))) -
               g_mus_as;
      }
      prefix = hi;
      zsum += zeta(ctx, -x.a(i));
    }
  }
  return ctx.g()(delta + ctx.mu_s() * ctx.a_s() - prefix) - zsum - g_mus_as;
}

}  // namespace liftcut
