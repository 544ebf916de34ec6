#include "liftcut/instance.hpp"

#include <stdexcept>

namespace liftcut {

InstanceX::InstanceX(std::vector<double> a, std::vector<int> mu, ConcaveFn f)
    : orig_a_(a), orig_f_(f), a_(std::move(a)), mu_(std::move(mu)), f_(std::move(f)) {
  if (a_.size() != mu_.size()) throw std::invalid_argument("InstanceX: a and mu sizes differ");
  flipped_.assign(a_.size(), false);
  double shift_by = 0.0;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (mu_[i] < 1) throw std::invalid_argument("InstanceX: mu must be >= 1 componentwise");
    if (a_[i] < 0.0) {
      flipped_[i] = true;
      any_flipped_ = true;
      shift_by += a_[i] * mu_[i];
      a_[i] = -a_[i];
    }
  }
  if (any_flipped_) f_ = shift(f_, shift_by);
}

double InstanceX::eval_w(const std::vector<int>& x) const {
  double z = 0.0;
  for (size_t i = 0; i < orig_a_.size(); ++i) z += orig_a_[i] * x[i];
  return orig_f_(z);
}

double InstanceX::eval_w(const std::vector<double>& x) const {
  double z = 0.0;
  for (size_t i = 0; i < orig_a_.size(); ++i) z += orig_a_[i] * x[i];
  return orig_f_(z);
}

nlohmann::json InstanceX::to_json() const {
  return {{"n", n()}, {"a", orig_a_}, {"mu", mu_}, {"f", orig_f_.to_json()}};
}

InstanceX InstanceX::from_json(const nlohmann::json& j) {
  return InstanceX(j.at("a").get<std::vector<double>>(), j.at("mu").get<std::vector<int>>(),
                   ConcaveFn::from_json(j.at("f")));
}

}  // namespace liftcut
