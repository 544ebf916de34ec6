#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "liftcut/cut.hpp"
#include "liftcut/cutgen.hpp"
#include "liftcut/problems.hpp"

namespace liftcut {

struct BncConfig {
  bool use_oa = true;
  std::set<CutFamily> families;
  bool prefer_exact = true;
  double time_limit = 600.0;  // seconds
  long node_limit = 100000000L;
  uint64_t seed = 0;  // recorded in stats; the search itself is deterministic
};

struct SolveStats {
  long cuts_added = 0;
  long nodes = 0;
  double wall_time = 0.0;
  double separation_time = 0.0;
  double root_bound = 0.0;
  double incumbent = 0.0;
  double proven_bound = 0.0;
  std::string status;             // "optimal" | "limit"
  std::vector<double> ub_trace;   // proven upper bound after each processed node

  nlohmann::json to_json() const;
};

struct BncResult {
  double objective = 0.0;
  std::vector<double> x;  // all model columns (integer vars then w vars)
  SolveStats stats;
};

// Gradient inequality for one nonlinear row with f(z) = 1 - exp(-z): exactly
// tight at xbar and valid everywhere by concavity. alpha is indexed by the
// row's local variables.
Cut oa_cut(const std::vector<double>& a, const std::vector<int>& xbar);

// LP-based branch and cut for the three problem forms. Lazy linearizations
// at integral points guarantee correctness; the configured lifted-cut
// families strengthen the relaxation. Deterministic for a fixed
// (problem, config).
BncResult branch_and_cut(const Problem& problem, const BncConfig& config);

}  // namespace liftcut
