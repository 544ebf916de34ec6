#pragma once

#include <vector>

#include <json.hpp>

#include "liftcut/concave.hpp"

namespace liftcut {

// One-variable restriction: w <= g(a x), 0 <= x <= mu, x integer.
struct Instance1D {
  double a;
  int mu;
  ConcaveFn g;
};

// The mixed-integer set {(w, x) : w <= f(a^T x), 0 <= x <= mu, x integer}.
// Variables with negative input weight are complemented at construction
// (x_i := mu_i - y_i), so the internal view always has a >= 0; cut emitters
// flip the affected coordinates back so callers only ever see original
// variables.
class InstanceX {
 public:
  InstanceX(std::vector<double> a, std::vector<int> mu, ConcaveFn f);

  int n() const { return static_cast<int>(a_.size()); }
  // Internal (complemented) view.
  double a(int i) const { return a_[i]; }
  const std::vector<double>& a() const { return a_; }
  int mu(int i) const { return mu_[i]; }
  const std::vector<int>& mu() const { return mu_; }
  const ConcaveFn& f() const { return f_; }
  bool flipped(int i) const { return flipped_[i]; }
  bool any_flipped() const { return any_flipped_; }

  // Original data, for serialization and for evaluating w at original points.
  const std::vector<double>& original_a() const { return orig_a_; }
  const ConcaveFn& original_f() const { return orig_f_; }
  double eval_w(const std::vector<int>& x) const;
  double eval_w(const std::vector<double>& x) const;

  nlohmann::json to_json() const;
  static InstanceX from_json(const nlohmann::json& j);

 private:
  std::vector<double> orig_a_;
  ConcaveFn orig_f_;
  std::vector<double> a_;
  std::vector<int> mu_;
  ConcaveFn f_;
  std::vector<bool> flipped_;
  bool any_flipped_ = false;
};

}  // namespace liftcut
