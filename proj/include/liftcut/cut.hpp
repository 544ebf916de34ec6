#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace liftcut {

// Affine inequality on (w, x). Normal cuts read w <= alpha0 + sum alpha_i x_i.
// Bound cuts (is_bound = true, e.g. the box facets returned by hull_1d)
// carry no w term and read 0 <= alpha0 + sum alpha_i x_i.
struct Cut {
  double alpha0 = 0.0;
  std::vector<double> alpha;
  bool is_bound = false;

  // Provenance: which generator emitted the cut and from which
  // (s, k, S0, S1) context, plus per-family tags such as the lifting
  // approximation actually used.
  std::string family;
  nlohmann::json context;

  double rhs(const std::vector<double>& x) const {
    double r = alpha0;
    for (size_t i = 0; i < alpha.size(); ++i) r += alpha[i] * x[i];
    return r;
  }
  double rhs(const std::vector<int>& x) const {
    double r = alpha0;
    for (size_t i = 0; i < alpha.size(); ++i) r += alpha[i] * x[i];
    return r;
  }

  nlohmann::json to_json() const;
  static Cut from_json(const nlohmann::json& j);
};

}  // namespace liftcut
