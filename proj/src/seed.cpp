#include "liftcut/seed.hpp"

#include <stdexcept>

namespace liftcut {

Cut seed_inequality(const Instance1D& inst, int k) {
  if (k < 1 || k > inst.mu) throw std::invalid_argument("seed_inequality: k out of [1, mu]");
  double gk = inst.g(k * inst.a);
  double gk1 = inst.g((k - 1) * inst.a);
  double slope = gk - gk1;
  Cut cut;
  cut.alpha = {slope};
  cut.alpha0 = gk - slope * k;
  cut.family = "seed";
  cut.context = {{"k", k}};
  return cut;
}

std::vector<Cut> hull_1d(const Instance1D& inst) {
  std::vector<Cut> cuts;
  cuts.reserve(inst.mu + 2);
  for (int k = 1; k <= inst.mu; ++k) cuts.push_back(seed_inequality(inst, k));

  Cut lo;
  lo.is_bound = true;
  lo.alpha0 = 0.0;
  lo.alpha = {1.0};  // 0 <= x
  lo.family = "bound";
  cuts.push_back(lo);

  Cut hi;
  hi.is_bound = true;
  hi.alpha0 = inst.mu;
  hi.alpha = {-1.0};  // 0 <= mu - x
  hi.family = "bound";
  cuts.push_back(hi);
  return cuts;
}

}  // namespace liftcut
