#include "liftcut/cutgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "liftcut/constants.hpp"

namespace liftcut {

namespace {

void snap_coefficients(Cut& cut) {
  if (std::fabs(cut.alpha0) < kCoefSnap) cut.alpha0 = 0.0;
  for (double& c : cut.alpha)
    if (std::fabs(c) < kCoefSnap) c = 0.0;
}

// Flattens per-variable coefficients (c0 on x_i for S0-side terms, c1 on
// (mu_i - x_i) for S1-side terms) into a Cut over original variables,
// undoing any complement applied at instance construction.
Cut assemble(const LiftContext& ctx, const std::vector<double>& c0, const std::vector<double>& c1,
             const char* family) {
  const InstanceX& x = ctx.instance();
  Cut cut;
  cut.alpha.assign(x.n(), 0.0);
  cut.alpha[ctx.s()] = ctx.rho();
  cut.alpha0 = ctx.g_k_as() - ctx.k() * ctx.rho();
  for (size_t t = 0; t < ctx.s0().size(); ++t) cut.alpha[ctx.s0()[t]] = c0[t];
  for (size_t t = 0; t < ctx.s1().size(); ++t) {
    int i = ctx.s1()[t];
    cut.alpha[i] = -c1[t];
    cut.alpha0 += c1[t] * x.mu(i);
  }
  if (x.any_flipped()) {
    for (int i = 0; i < x.n(); ++i) {
      if (x.flipped(i)) {
        cut.alpha0 += cut.alpha[i] * x.mu(i);
        cut.alpha[i] = -cut.alpha[i];
      }
    }
  }
  snap_coefficients(cut);
  cut.family = family;
  cut.context = ctx.to_json();
  return cut;
}

struct KnapsackData {
  double theta;
  double sigma;
};

// Validates the knapsack preconditions and extracts theta/sigma.
KnapsackData knapsack_data(const LiftContext& ctx) {
  // Peel shifts off the instance objective to find the knapsack bound.
  const ConcaveFn* f = &ctx.instance().f();
  double shift_acc = 0.0;
  while (f->kind() == ConcaveFn::Kind::Shifted) {
    shift_acc += f->param0();
    f = &f->inner();
  }
  if (f->kind() != ConcaveFn::Kind::MinLinear)
    throw std::invalid_argument("knapsack closed form: objective is not min{0, b - z}");
  double b = f->param0() - shift_acc;

  double fixed = 0.0;
  for (int i : ctx.s1()) fixed += ctx.instance().a(i) * ctx.instance().mu(i);
  double theta = b - fixed;
  if (!(theta > kTol)) throw std::invalid_argument("knapsack closed form: theta must be positive");
  if (!(ctx.a_s() * ctx.mu_s() - theta > kTol))
    throw std::invalid_argument("knapsack closed form: a_s mu_s must exceed theta");
  double ratio = theta / ctx.a_s();
  if (std::fabs(ratio - std::round(ratio)) < kTol)
    throw std::invalid_argument("knapsack closed form: theta / a_s must not be integral");
  if (ctx.k() != static_cast<int>(std::ceil(ratio)))
    throw std::invalid_argument("knapsack closed form: k must equal ceil(theta / a_s)");
  double sigma = theta - std::floor(ratio) * ctx.a_s();
  return {theta, sigma};
}

double frac_part(double delta, double a) { return delta - snapped_floor_div(delta, a) * a; }

}  // namespace

Cut single_phase_cut(const LiftContext& ctx) {
  std::vector<double> c0, c1;
  for (int i : ctx.s0()) c0.push_back(z_approx(ctx, ctx.instance().a(i)));
  for (int i : ctx.s1()) c1.push_back(z_approx(ctx, -ctx.instance().a(i)));
  return assemble(ctx, c0, c1, "single_phase");
}

Cut two_phase_cut_I(const LiftContext& ctx, bool prefer_exact) {
  bool exact = prefer_exact && (ctx.s0_all_large() || ctx.k() == 1);
  std::vector<double> c0, c1;
  for (int i : ctx.s0()) c0.push_back(zeta(ctx, ctx.instance().a(i)));
  for (int i : ctx.s1()) {
    double d = -ctx.instance().a(i);
    c1.push_back(exact ? *eta_exact(ctx, d) : eta_upper(ctx, d));
  }
  Cut cut = assemble(ctx, c0, c1, "two_phase_I");
  cut.context["second_phase"] = exact ? "exact" : "upper";
  return cut;
}

Cut two_phase_cut_II(const LiftContext& ctx, bool prefer_exact) {
  bool exact = prefer_exact && (ctx.s1_all_large() || ctx.k() == ctx.mu_s());
  std::vector<double> c0, c1;
  for (int i : ctx.s0()) {
    double d = ctx.instance().a(i);
    c0.push_back(exact ? *phi_exact(ctx, d) : phi_upper(ctx, d));
  }
  for (int i : ctx.s1()) c1.push_back(zeta(ctx, -ctx.instance().a(i)));
  Cut cut = assemble(ctx, c0, c1, "two_phase_II");
  cut.context["second_phase"] = exact ? "exact" : "upper";
  return cut;
}

Cut complement_transform(const Cut& cut, const std::vector<int>& mu) {
  if (cut.alpha.size() != mu.size())
    throw std::invalid_argument("complement_transform: dimension mismatch");
  Cut out = cut;
  for (size_t i = 0; i < mu.size(); ++i) {
    out.alpha0 += out.alpha[i] * mu[i];
    out.alpha[i] = -out.alpha[i];
  }
  out.context["complemented"] = !cut.context.value("complemented", false);
  return out;
}

Cut tworow_transform(const Cut& cut_for_xk, const std::vector<double>& a2, double b2) {
  if (cut_for_xk.alpha.size() != a2.size())
    throw std::invalid_argument("tworow_transform: dimension mismatch");
  Cut out = cut_for_xk;
  if (out.is_bound) return out;
  out.alpha0 += b2;
  for (size_t i = 0; i < a2.size(); ++i) out.alpha[i] -= a2[i];
  out.context["tworow"] = true;
  return out;
}

Cut mir_closed_form(const LiftContext& ctx) {
  auto [theta, sigma] = knapsack_data(ctx);
  (void)theta;
  const InstanceX& x = ctx.instance();
  const double as = ctx.a_s();
  auto coef = [&](double delta) {
    return -delta + std::min(sigma, frac_part(delta, as)) + snapped_floor_div(delta, as) * sigma;
  };
  std::vector<double> c0, c1;
  for (int i : ctx.s0()) c0.push_back(coef(x.a(i)));
  for (int i : ctx.s1()) c1.push_back(coef(-x.a(i)));
  Cut cut = assemble(ctx, c0, c1, "mir");
  // The assemble() constant is g(k a_s) - k rho = -(k-1)(sigma - a_s) here,
  // and rho = sigma - a_s = coef(a_s), so the flattening matches the printed
  // form term for term.
  return cut;
}

std::pair<Cut, Cut> knapsack_pack_cover_cuts(const LiftContext& ctx) {
  auto [theta, sigma] = knapsack_data(ctx);
  const InstanceX& x = ctx.instance();
  const double as = ctx.a_s();
  const int k = ctx.k();
  const int mus = ctx.mu_s();

  auto zeta_k = [&](double delta) {
    double fl = snapped_floor_div(delta, as);
    if (fl < k - mus - 1) return (k - mus - 1) * (sigma - as);
    if (fl >= k) return -delta + k * sigma;
    return -delta + std::min(sigma, frac_part(delta, as)) + fl * sigma;
  };
  // Unclamped middle expression: the reduced form of the relaxation Z on all of R.
  auto z_k = [&](double delta) {
    return -delta + std::min(sigma, frac_part(delta, as)) + snapped_floor_div(delta, as) * sigma;
  };

  // Reduced second-phase upper bound for delta <= 0, piecewise linear in
  // delta and the unit prefix sums; no calls into g.
  auto eta_upper_k = [&](double delta) {
    const UnitArray& u = ctx.s0plus();
    if (u.units() == 0) return z_k(delta);
    int p = 1;
    while (p <= u.units() &&
           !(delta > -u.prefix[p] + kBranchSnap * std::max(1.0, u.prefix[p])))
      ++p;
    double big_a;
    double units_before;
    double ell;
    if (p <= u.units()) {
      big_a = u.prefix[p];
      units_before = p - 1;
      ell = std::clamp(snapped_floor_div(k * as - big_a - delta, as), 0.0,
                       static_cast<double>(k - 1));
    } else {
      big_a = u.prefix[u.units()];
      units_before = u.units() - 1;
      ell = std::max(snapped_floor_div(k * as - big_a - delta, as), static_cast<double>(k));
    }
    return std::min(0.0, theta - delta - big_a - ell * as) + big_a - units_before * k * sigma -
           theta - ell * (sigma - as);
  };

  auto phi_upper_k = [&](double delta) {
    const UnitArray& u = ctx.s1plus();
    if (u.units() == 0) return z_k(delta);
    int p = 1;
    while (p <= u.units() &&
           !(delta < u.prefix[p] - kBranchSnap * std::max(1.0, u.prefix[p])))
      ++p;
    double big_a;
    double units_before;
    double ell;
    if (p <= u.units()) {
      big_a = u.prefix[p];
      units_before = p - 1;
      ell = std::clamp(snapped_floor_div(delta - big_a - (k - mus - 1) * as, as), 0.0,
                       static_cast<double>(mus - k));
    } else {
      big_a = u.prefix[u.units()];
      units_before = u.units() - 1;
      ell = std::max(snapped_floor_div(delta - big_a - (k - mus - 1) * as, as),
                     static_cast<double>(mus - k + 1));
    }
    return std::min(0.0, theta - delta - (mus - ell) * as + big_a) +
           ((mus - k + 1) * units_before + ell) * (sigma - as);
  };

  std::vector<double> c0_pack, c1_pack, c0_cover, c1_cover;
  for (int i : ctx.s0()) {
    double a = x.a(i);
    bool large = a >= k * as - kBranchSnap * std::max(1.0, k * as);
    c0_pack.push_back(large ? -a + k * sigma : zeta_k(a));
    c0_cover.push_back(phi_upper_k(a));
  }
  for (int i : ctx.s1()) {
    double a = x.a(i);
    bool large = a >= (mus - k + 1) * as - kBranchSnap * std::max(1.0, (mus - k + 1) * as);
    c1_pack.push_back(eta_upper_k(-a));
    c1_cover.push_back(large ? (k - mus - 1) * (sigma - as) : zeta_k(-a));
  }
  Cut pack = assemble(ctx, c0_pack, c1_pack, "knapsack_pack");
  Cut cover = assemble(ctx, c0_cover, c1_cover, "knapsack_cover");
  return {pack, cover};
}

Cut submodular_cut_closed_form(const LiftContext& ctx, CutFamily family) {
  const InstanceX& x = ctx.instance();
  for (int i = 0; i < x.n(); ++i)
    if (x.mu(i) != 1)
      throw std::invalid_argument("submodular closed form: instance must be binary");
  const ConcaveFn& f = x.f();
  const double as = ctx.a_s();
  double a_s1 = 0.0;
  for (int i : ctx.s1()) a_s1 += x.a(i);
  double f_s1 = f(a_s1);
  double f_s1s = f(a_s1 + as);
  double rho = f_s1s - f_s1;

  std::vector<double> c0, c1;
  switch (family) {
    case CutFamily::Single: {
      auto zb = [&](double delta) {
        double ell = snapped_floor_div(delta, as);
        return f(delta + a_s1 - ell * as) + ell * rho - f_s1;
      };
      for (int i : ctx.s0()) c0.push_back(zb(x.a(i)));
      for (int i : ctx.s1()) c1.push_back(zb(-x.a(i)));
      Cut cut = assemble(ctx, c0, c1, "binary_single");
      return cut;
    }
    case CutFamily::TwoI: {
      // Exact eta over S0 + s sorted by weight descending.
      std::vector<int> items = ctx.s0();
      items.push_back(ctx.s());
      std::sort(items.begin(), items.end(), [&](int i, int j) {
        if (x.a(i) != x.a(j)) return x.a(i) > x.a(j);
        return i < j;
      });
      std::vector<double> prefix{0.0}, zsum{0.0};
      for (int i : items) {
        prefix.push_back(prefix.back() + x.a(i));
        zsum.push_back(zsum.back() + (f(x.a(i) + a_s1) - f_s1));
      }
      auto eta_b = [&](double delta) {
        int np = static_cast<int>(items.size());
        int p = 1;
        while (p <= np && !(delta > -prefix[p] + kBranchSnap * std::max(1.0, prefix[p]))) ++p;
        p = std::min(p, np);
        return f(delta + prefix[p] + a_s1) - zsum[p] - f_s1;
      };
      for (int i : ctx.s0()) c0.push_back(f(x.a(i) + a_s1) - f_s1);
      for (int i : ctx.s1()) c1.push_back(eta_b(-x.a(i)));
      return assemble(ctx, c0, c1, "binary_two_I");
    }
    case CutFamily::TwoII: {
      std::vector<int> items = ctx.s1();
      items.push_back(ctx.s());
      std::sort(items.begin(), items.end(), [&](int i, int j) {
        if (x.a(i) != x.a(j)) return x.a(i) > x.a(j);
        return i < j;
      });
      double a_full = a_s1 + as;  // a(S1 + s)
      std::vector<double> prefix{0.0}, zsum{0.0};
      for (int i : items) {
        prefix.push_back(prefix.back() + x.a(i));
        zsum.push_back(zsum.back() + (f(a_full - x.a(i)) - f(a_full)));
      }
      auto phi_b = [&](double delta) {
        int np = static_cast<int>(items.size());
        int p = 1;
        while (p <= np && !(delta < prefix[p] - kBranchSnap * std::max(1.0, prefix[p]))) ++p;
        p = std::min(p, np);
        return f(delta - prefix[p] + a_full) - zsum[p] - f(a_full);
      };
      for (int i : ctx.s0()) c0.push_back(phi_b(x.a(i)));
      for (int i : ctx.s1()) c1.push_back(f(a_full - x.a(i)) - f(a_full));
      return assemble(ctx, c0, c1, "binary_two_II");
    }
  }
  throw std::logic_error("submodular_cut_closed_form: unknown family");
}

}  // namespace liftcut
