#include "liftcut/separation.hpp"

#include <algorithm>
#include <cmath>

#include "liftcut/constants.hpp"

namespace liftcut {

namespace {

constexpr double kIntSnap = 1e-9;

bool is_integral(double v) { return std::fabs(v - std::round(v)) <= kIntSnap; }

}  // namespace

std::optional<SeparationResult> separate(double wbar, const std::vector<double>& xbar,
                                         const std::shared_ptr<const InstanceX>& inst,
                                         const std::set<CutFamily>& families, bool prefer_exact) {
  const InstanceX& x = *inst;
  const int n = x.n();

  // Work on the complemented view so the seed partition reads off bounds
  // uniformly; emitted cuts are always over original variables.
  std::vector<double> xi(n);
  for (int i = 0; i < n; ++i) {
    double v = x.flipped(i) ? x.mu(i) - xbar[i] : xbar[i];
    if (is_integral(v)) v = std::round(v);
    xi[i] = v;
  }

  std::vector<int> interior;
  for (int i = 0; i < n; ++i)
    if (xi[i] > 0.0 && xi[i] < x.mu(i)) interior.push_back(i);

  bool exact_case = interior.empty();
  int s = -1, k = 1;
  if (interior.empty()) {
    for (int i = 0; i < n; ++i)
      if (x.a(i) > 0.0 && (s < 0 || x.a(i) > x.a(s))) s = i;
    if (s < 0) return std::nullopt;  // all-zero weights: nothing to cut with
    k = xi[s] == 0.0 ? 1 : x.mu(s);
  } else if (interior.size() == 1 && is_integral(xi[interior[0]])) {
    bool rest_at_bounds = true;
    for (int i = 0; i < n; ++i)
      if (i != interior[0] && xi[i] != 0.0 && xi[i] != x.mu(i)) rest_at_bounds = false;
    if (rest_at_bounds) {
      exact_case = true;
      s = interior[0];
      k = static_cast<int>(std::round(xi[s]));
    }
  }

  if (exact_case) {
    double w_at = x.eval_w(xbar);
    if (wbar <= w_at + kTol) return std::nullopt;
    std::vector<int> s0, s1;
    for (int i = 0; i < n; ++i) {
      if (i == s) continue;
      (xi[i] == 0.0 ? s0 : s1).push_back(i);
    }
    LiftContext ctx(inst, s, k, std::move(s0), std::move(s1));
    Cut cut = single_phase_cut(ctx);
    cut.context["separation_case"] = interior.empty() ? "all_at_bounds" : "one_interior_integral";
    return SeparationResult{std::move(cut), wbar - w_at};
  }

  // Heuristic: try every interior component as the seed.
  std::optional<SeparationResult> best;
  for (int cand : interior) {
    if (!(x.a(cand) > 0.0)) continue;
    int kk = static_cast<int>(std::ceil(xi[cand] - kIntSnap));
    kk = std::clamp(kk, 1, x.mu(cand));
    std::vector<int> s0, s1;
    for (int i = 0; i < n; ++i) {
      if (i == cand) continue;
      (xi[i] >= x.mu(i) / 2.0 ? s1 : s0).push_back(i);
    }
    LiftContext ctx(inst, cand, kk, std::move(s0), std::move(s1));
    for (CutFamily fam : families) {
      Cut cut;
      switch (fam) {
        case CutFamily::Single: cut = single_phase_cut(ctx); break;
        case CutFamily::TwoI: cut = two_phase_cut_I(ctx, prefer_exact); break;
        case CutFamily::TwoII: cut = two_phase_cut_II(ctx, prefer_exact); break;
      }
      double viol = wbar - cut.rhs(xbar);
      if (viol > kViolMin && (!best || viol > best->violation + kBranchSnap)) {
        best = SeparationResult{std::move(cut), viol};
      }
    }
  }
  return best;
}

}  // namespace liftcut
