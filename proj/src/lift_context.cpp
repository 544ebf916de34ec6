#include "liftcut/lift_context.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "liftcut/constants.hpp"
#include "liftcut/lifting.hpp"

namespace liftcut {

namespace {

double zeta_raw(const ConcaveFn& g, double a_s, int k, int mu_s, double rho, double g_k_as,
                double delta) {
  double ell = snapped_floor_div(delta, a_s);
  ell = std::max(ell, static_cast<double>(k - mu_s - 1));
  ell = std::min(ell, static_cast<double>(k - 1));
  return g(delta + (k - ell - 1) * a_s) + (ell + 1) * rho - g_k_as;
}

// Expands `items` into units ordered by weight descending, ties by index
// ascending, and fills prefix sums. lift(i) is the per-unit lifting value of
// item i.
template <typename LiftFn>
UnitArray build_units(const InstanceX& inst, std::vector<int> items, LiftFn lift) {
  std::sort(items.begin(), items.end(), [&](int i, int j) {
    if (inst.a(i) != inst.a(j)) return inst.a(i) > inst.a(j);
    return i < j;
  });
  UnitArray u;
  u.prefix.push_back(0.0);
  u.lift_prefix.push_back(0.0);
  for (int i : items) {
    double lv = lift(i);
    for (int q = 0; q < inst.mu(i); ++q) {
      u.item.push_back(i);
      u.value.push_back(inst.a(i));
      u.prefix.push_back(u.prefix.back() + inst.a(i));
      u.lift_prefix.push_back(u.lift_prefix.back() + lv);
    }
  }
  return u;
}

}  // namespace

LiftContext::LiftContext(const InstanceX& inst, int s, int k, std::vector<int> s0,
                         std::vector<int> s1)
    : LiftContext(std::make_shared<InstanceX>(inst), s, k, std::move(s0), std::move(s1)) {}

LiftContext::LiftContext(std::shared_ptr<const InstanceX> inst, int s, int k, std::vector<int> s0,
                         std::vector<int> s1)
    : inst_(std::move(inst)), s_(s), k_(k), s0_(std::move(s0)), s1_(std::move(s1)),
      g_(inst_->f()) {
  const InstanceX& x = *inst_;
  if (s_ < 0 || s_ >= x.n()) throw std::invalid_argument("LiftContext: s out of range");
  if (!(x.a(s_) > 0.0)) throw std::invalid_argument("LiftContext: a_s must be positive");
  mu_s_ = x.mu(s_);
  a_s_ = x.a(s_);
  if (k_ < 1 || k_ > mu_s_) throw std::invalid_argument("LiftContext: k out of [1, mu_s]");

  std::sort(s0_.begin(), s0_.end());
  std::sort(s1_.begin(), s1_.end());
  std::vector<char> seen(x.n(), 0);
  seen[s_] = 1;
  for (int i : s0_) {
    if (i < 0 || i >= x.n() || seen[i]) throw std::invalid_argument("LiftContext: bad partition");
    seen[i] = 1;
  }
  for (int i : s1_) {
    if (i < 0 || i >= x.n() || seen[i]) throw std::invalid_argument("LiftContext: bad partition");
    seen[i] = 1;
  }
  for (int i = 0; i < x.n(); ++i)
    if (!seen[i]) throw std::invalid_argument("LiftContext: partition must cover all variables");

  double fixed = 0.0;
  for (int i : s1_) fixed += x.mu(i) * x.a(i);
  g_ = shift(x.f(), fixed);
  g_k_as_ = g_(k_ * a_s_);
  rho_ = g_k_as_ - g_((k_ - 1) * a_s_);

  auto large = [&](double threshold, const std::vector<int>& set) {
    std::vector<int> out;
    for (int i : set)
      if (x.a(i) >= threshold - kBranchSnap * std::max(1.0, threshold)) out.push_back(i);
    return out;
  };
  std::vector<int> big0 = large(k_ * a_s_, s0_);
  std::vector<int> big1 = large((mu_s_ - k_ + 1) * a_s_, s1_);
  s0_all_large_ = big0.size() == s0_.size();
  s1_all_large_ = big1.size() == s1_.size();

  s0plus_ = build_units(x, big0, [&](int i) {
    return zeta_raw(g_, a_s_, k_, mu_s_, rho_, g_k_as_, x.a(i));
  });
  s1plus_ = build_units(x, big1, [&](int i) {
    return zeta_raw(g_, a_s_, k_, mu_s_, rho_, g_k_as_, -x.a(i));
  });
}

LiftContext LiftContext::complemented() const {
  const InstanceX& x = *inst_;
  double total = 0.0;
  for (int i = 0; i < x.n(); ++i) total += x.a(i) * x.mu(i);
  auto comp =
      std::make_shared<InstanceX>(x.a(), x.mu(), reflect(x.f(), total));
  return LiftContext(comp, s_, mu_s_ - k_ + 1, s1_, s0_);
}

nlohmann::json LiftContext::to_json() const {
  nlohmann::json j;
  j["s"] = s_;
  j["k"] = k_;
  j["S0"] = s0_;
  j["S1"] = s1_;
  j["s0plus_order"] = s0plus_.item;
  j["s1plus_order"] = s1plus_.item;
  return j;
}

LiftContext LiftContext::from_json(const nlohmann::json& j,
                                   std::shared_ptr<const InstanceX> inst) {
  return LiftContext(std::move(inst), j.at("s").get<int>(), j.at("k").get<int>(),
                     j.at("S0").get<std::vector<int>>(), j.at("S1").get<std::vector<int>>());
}

}  // namespace liftcut
