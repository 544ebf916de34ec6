#pragma once

#include <memory>
#include <vector>

#include <json.hpp>

#include "liftcut/concave.hpp"
#include "liftcut/instance.hpp"

namespace liftcut {

// Binarized expansion of a "large coefficient" item subset: each item i is
// repeated mu_i times, items ordered by weight descending (ties by original
// index ascending). prefix[p] is the sum of the first p unit weights;
// lift_prefix[p] accumulates the per-unit first-phase lifting values.
struct UnitArray {
  std::vector<int> item;
  std::vector<double> value;
  std::vector<double> prefix;       // size units+1, prefix[0] = 0
  std::vector<double> lift_prefix;  // size units+1, lift_prefix[0] = 0
  int units() const { return static_cast<int>(value.size()); }
};

// A seed partition (s, k, S0, S1) over an instance, plus everything the
// closed-form lifting functions need: the restricted concave g, the seed
// slope rho, and the sorted unit expansions of the two large-coefficient
// subsets with their prefix sums.
class LiftContext {
 public:
  LiftContext(std::shared_ptr<const InstanceX> inst, int s, int k, std::vector<int> s0,
              std::vector<int> s1);
  LiftContext(const InstanceX& inst, int s, int k, std::vector<int> s0, std::vector<int> s1);

  const InstanceX& instance() const { return *inst_; }
  std::shared_ptr<const InstanceX> instance_ptr() const { return inst_; }
  int s() const { return s_; }
  int k() const { return k_; }
  const std::vector<int>& s0() const { return s0_; }
  const std::vector<int>& s1() const { return s1_; }
  double a_s() const { return a_s_; }
  int mu_s() const { return mu_s_; }
  const ConcaveFn& g() const { return g_; }
  double rho() const { return rho_; }
  double g_k_as() const { return g_k_as_; }
  const UnitArray& s0plus() const { return s0plus_; }
  const UnitArray& s1plus() const { return s1plus_; }
  bool s0_all_large() const { return s0_all_large_; }  // S0 equals its large subset
  bool s1_all_large() const { return s1_all_large_; }

  // Context on the complemented instance (y = mu - x): swapped subsets,
  // k -> mu_s - k + 1, and the reflected objective function.
  LiftContext complemented() const;

  nlohmann::json to_json() const;
  static LiftContext from_json(const nlohmann::json& j, std::shared_ptr<const InstanceX> inst);

 private:
  std::shared_ptr<const InstanceX> inst_;
  int s_;
  int k_;
  std::vector<int> s0_, s1_;
  double a_s_;
  int mu_s_;
  ConcaveFn g_;
  double rho_ = 0.0;
  double g_k_as_ = 0.0;
  UnitArray s0plus_, s1plus_;
  bool s0_all_large_ = false, s1_all_large_ = false;
};

}  // namespace liftcut
