#include "liftcut/polyoracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "liftcut/constants.hpp"
#include "liftcut/lifting.hpp"

namespace liftcut {

std::vector<std::pair<double, std::vector<int>>> enumerate_points(const InstanceX& inst) {
  double count = 1.0;
  for (int i = 0; i < inst.n(); ++i) count *= inst.mu(i) + 1;
  if (count > 2e6) throw std::invalid_argument("enumerate_points: box too large");

  std::vector<std::pair<double, std::vector<int>>> pts;
  pts.reserve(static_cast<size_t>(count));
  std::vector<int> x(inst.n(), 0);
  while (true) {
    pts.emplace_back(inst.eval_w(x), x);
    int i = 0;
    while (i < inst.n() && x[i] == inst.mu(i)) x[i++] = 0;
    if (i == inst.n()) break;
    ++x[i];
  }
  return pts;
}

std::optional<CutViolation> check_validity(const Cut& cut, const InstanceX& inst) {
  std::optional<CutViolation> worst;
  for (const auto& [w, x] : enumerate_points(inst)) {
    double slack = cut.is_bound ? cut.rhs(x) : cut.rhs(x) - w;
    if (slack < -kTol) {
      if (!worst || -slack > worst->amount) worst = CutViolation{x, -slack};
    }
  }
  return worst;
}

namespace {

// Affine-rank elimination with rows scaled to unit infinity norm; the result
// is invariant to row order.
int matrix_rank(std::vector<std::vector<double>> rows) {
  for (auto& r : rows) {
    double norm = 0.0;
    for (double v : r) norm = std::max(norm, std::fabs(v));
    if (norm > 0.0)
      for (double& v : r) v /= norm;
  }
  size_t ncols = rows.empty() ? 0 : rows[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < rows.size(); ++col) {
    size_t best = row;
    for (size_t r = row + 1; r < rows.size(); ++r)
      if (std::fabs(rows[r][col]) > std::fabs(rows[best][col])) best = r;
    if (std::fabs(rows[best][col]) < kRankPivotTol) continue;
    std::swap(rows[row], rows[best]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == row) continue;
      double factor = rows[r][col] / rows[row][col];
      for (size_t c = col; c < ncols; ++c) rows[r][c] -= factor * rows[row][c];
    }
    ++rank;
    ++row;
  }
  return rank;
}

}  // namespace

int face_dimension(const Cut& cut, const InstanceX& inst) {
  if (check_validity(cut, inst))
    throw std::invalid_argument("face_dimension: cut is not valid on the instance");

  std::vector<std::vector<double>> tight;
  for (const auto& [w, x] : enumerate_points(inst)) {
    double scale = cut.is_bound ? std::max(1.0, std::fabs(cut.alpha0))
                                : std::max(1.0, std::fabs(w));
    double resid = cut.is_bound ? cut.rhs(x) : cut.rhs(x) - w;
    if (std::fabs(resid) <= kFaceTol * scale) {
      std::vector<double> pt;
      pt.reserve(inst.n() + 1);
      pt.push_back(w);
      for (int xi : x) pt.push_back(xi);
      tight.push_back(std::move(pt));
    }
  }
  if (tight.empty()) return -1;

  std::vector<std::vector<double>> diffs;
  for (size_t r = 1; r < tight.size(); ++r) {
    std::vector<double> d(tight[r].size());
    for (size_t c = 0; c < d.size(); ++c) d[c] = tight[r][c] - tight[0][c];
    diffs.push_back(std::move(d));
  }
  if (cut.is_bound) {
    // The face contains the downward ray on w.
    std::vector<double> ray(inst.n() + 1, 0.0);
    ray[0] = -1.0;
    diffs.push_back(std::move(ray));
  }
  return matrix_rank(std::move(diffs));
}

double lift_bruteforce(const LiftContext& ctx, double delta, LiftKind which) {
  const InstanceX& x = ctx.instance();
  const ConcaveFn& g = ctx.g();
  const double as = ctx.a_s();
  const int k = ctx.k();

  if (which == LiftKind::Zeta) {
    double best = -HUGE_VAL;
    for (int xs = 0; xs <= ctx.mu_s(); ++xs)
      best = std::max(best, g(delta + as * xs) - ctx.rho() * (xs - k) - ctx.g_k_as());
    return best;
  }

  if (which == LiftKind::Phi) {
    return lift_bruteforce(ctx.complemented(), -delta, LiftKind::Eta);
  }

  // Second-phase objective over the S0 + s box; EtaRelaxed raises the cap on
  // the seed variable and verifies the tail is non-improving.
  int cap = ctx.mu_s();
  if (which == LiftKind::EtaRelaxed)
    cap = k + static_cast<int>(std::ceil(std::fabs(delta) / as)) + 1;

  std::vector<int> vars = ctx.s0();
  std::vector<double> zeta_coef;
  for (int i : vars) zeta_coef.push_back(zeta(ctx, x.a(i)));

  std::vector<double> best_per_level(cap + 1, -HUGE_VAL);
  std::vector<int> cur(vars.size(), 0);
  while (true) {
    double load = 0.0, lift_sum = 0.0;
    for (size_t t = 0; t < vars.size(); ++t) {
      load += x.a(vars[t]) * cur[t];
      lift_sum += zeta_coef[t] * cur[t];
    }
    for (int xs = 0; xs <= cap; ++xs) {
      double val = g(delta + load + as * xs) - lift_sum + (k - xs) * ctx.rho() - ctx.g_k_as();
      best_per_level[xs] = std::max(best_per_level[xs], val);
    }
    size_t t = 0;
    while (t < vars.size() && cur[t] == x.mu(vars[t])) cur[t++] = 0;
    if (t == vars.size()) break;
    ++cur[t];
  }
  double best = -HUGE_VAL;
  for (double v : best_per_level) best = std::max(best, v);
  if (which == LiftKind::EtaRelaxed && cap >= 1 &&
      best_per_level[cap] > best_per_level[cap - 1] + kTol)
    throw std::logic_error("lift_bruteforce: relaxation cap not past the decreasing tail");
  return best;
}

namespace {

std::pair<double, std::vector<double>> eum_bruteforce(const EumInstance& e) {
  if (e.n > 24) throw std::invalid_argument("optimum_bruteforce: EUM search space too large");
  double best = -HUGE_VAL;
  uint32_t best_mask = 0;
  for (uint32_t mask = 0; mask < (1u << e.n); ++mask) {
    double cap = 0.0;
    for (int i = 0; i < e.n; ++i)
      if (mask & (1u << i)) cap += e.a[i];
    if (cap > 1.0 + kTol) continue;
    double obj = 0.0;
    for (int j = 0; j < e.m; ++j) {
      double z = 0.0;
      for (int i = 0; i < e.n; ++i)
        if (mask & (1u << i)) z += e.v[j][i];
      obj += e.pi[j] * (1.0 - std::exp(-z / e.lambda));
    }
    if (obj > best) {
      best = obj;
      best_mask = mask;
    }
  }
  std::vector<double> x(e.n, 0.0);
  for (int i = 0; i < e.n; ++i)
    if (best_mask & (1u << i)) x[i] = 1.0;
  return {best, x};
}

void wta_recurse(const WtaInstance& w, int i, std::vector<int>& alloc,
                 std::vector<double>& load, double& best, std::vector<int>& best_alloc) {
  if (i == w.n) {
    double obj = 0.0;
    for (int j = 0; j < w.m; ++j) obj += w.value[j] * (1.0 - std::exp(-load[j]));
    if (obj > best) {
      best = obj;
      best_alloc = alloc;
    }
    return;
  }
  // Distribute 0..mu_i units of weapon i over the m targets.
  std::vector<int> dist(w.m, 0);
  auto place = [&](auto&& self, int j, int remaining) -> void {
    if (j == w.m) {
      for (int t = 0; t < w.m; ++t) {
        alloc[i * w.m + t] = dist[t];
        load[t] += w.a[i][t] * dist[t];
      }
      wta_recurse(w, i + 1, alloc, load, best, best_alloc);
      for (int t = 0; t < w.m; ++t) load[t] -= w.a[i][t] * dist[t];
      return;
    }
    for (int q = 0; q <= remaining; ++q) {
      dist[j] = q;
      self(self, j + 1, remaining - q);
    }
    dist[j] = 0;
  };
  place(place, 0, w.mu[i]);
}

std::pair<double, std::vector<double>> wta_bruteforce(const WtaInstance& w) {
  double space = 1.0;
  for (int i = 0; i < w.n; ++i) {
    double ways = 1.0;  // compositions of <= mu_i units into m bins
    for (int q = 1; q <= w.mu[i]; ++q) ways = ways * (w.m + q) / q;
    space *= ways;
  }
  if (space > 2e7) throw std::invalid_argument("optimum_bruteforce: WTA search space too large");
  std::vector<int> alloc(w.n * w.m, 0), best_alloc(w.n * w.m, 0);
  std::vector<double> load(w.m, 0.0);
  double best = -HUGE_VAL;
  wta_recurse(w, 0, alloc, load, best, best_alloc);
  return {best, std::vector<double>(best_alloc.begin(), best_alloc.end())};
}

std::pair<double, std::vector<double>> rawx_bruteforce(const RawXProblem& p) {
  double best = -HUGE_VAL;
  std::vector<int> best_x;
  for (const auto& [w, x] : enumerate_points(p.inst)) {
    if (w > best) {
      best = w;
      best_x = x;
    }
  }
  return {best, std::vector<double>(best_x.begin(), best_x.end())};
}

}  // namespace

std::pair<double, std::vector<double>> optimum_bruteforce(const Problem& problem) {
  if (const auto* e = std::get_if<EumInstance>(&problem)) return eum_bruteforce(*e);
  if (const auto* w = std::get_if<WtaInstance>(&problem)) return wta_bruteforce(*w);
  return rawx_bruteforce(std::get<RawXProblem>(problem));
}

}  // namespace liftcut
