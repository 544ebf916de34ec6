#pragma once

#include <variant>
#include <vector>

#include <json.hpp>

#include "liftcut/instance.hpp"

namespace liftcut {

// max sum_j pi_j w_j  s.t.  w_j <= 1 - exp(-v_j^T x / lambda),
//                           a^T x <= 1, x binary.
struct EumInstance {
  int n = 0;
  int m = 0;
  double lambda = 1.0;
  std::vector<double> a;               // capital requirement per option
  std::vector<double> pi;              // scenario probabilities
  std::vector<std::vector<double>> v;  // v[j][i], value of option i in scenario j
  uint64_t seed = 0;

  nlohmann::json to_json() const;
  static EumInstance from_json(const nlohmann::json& j);
};

// max sum_j V_j w_j  s.t.  w_j <= 1 - exp(-sum_i a_ij x_ij),
//                          sum_j x_ij <= mu_i, x integer >= 0.
struct WtaInstance {
  int n = 0;  // weapon types
  int m = 0;  // targets
  double rho = 0.0;
  std::vector<int> mu;
  std::vector<double> value;           // V_j
  std::vector<std::vector<double>> p;  // p[i][j], kill probability
  std::vector<std::vector<double>> a;  // a[i][j] = -ln(1 - p[i][j])
  uint64_t seed = 0;

  nlohmann::json to_json() const;
  static WtaInstance from_json(const nlohmann::json& j);
};

// max w over a single set instance (used for desk-scale solver checks).
struct RawXProblem {
  InstanceX inst;

  nlohmann::json to_json() const;
  static RawXProblem from_json(const nlohmann::json& j);
};

using Problem = std::variant<EumInstance, WtaInstance, RawXProblem>;

nlohmann::json problem_to_json(const Problem& p);
Problem problem_from_json(const nlohmann::json& j);

}  // namespace liftcut
