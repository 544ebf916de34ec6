#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "liftcut/bnc.hpp"
#include "liftcut/problems.hpp"

namespace liftcut {

// Deterministic instance generators; identical (params, seed) gives a
// byte-identical instance on every platform (see rng.hpp).
EumInstance gen_eum(int n, int m, double lambda, uint64_t seed);
WtaInstance gen_wta(int n, int m, double rho, uint64_t seed);

struct BenchSetting {
  std::string name;
  BncConfig config;
};

struct BenchConfig {
  std::string problem = "wta";                      // "eum" | "wta"
  std::vector<std::tuple<int, int, double>> grid;   // (n, m, lambda-or-rho)
  int instances_per_cell = 1;
  std::vector<BenchSetting> settings;
  uint64_t seed = 1;
  double time_limit = 600.0;
  // When false, the T / ST columns are written as 0.000 so that two runs
  // with identical seeds produce byte-identical CSV output.
  bool report_times = true;
};

struct BenchRow {
  int n, m;
  double param;
  int instance;
  std::string setting;
  long cuts, nodes;
  double time, sep_time, rgap, egap;
  std::string status;
};

struct BenchOutput {
  std::vector<BenchRow> rows;
  std::string csv;    // one line per (cell, instance, setting)
  std::string table;  // per-cell averages with unsolved-count superscripts
};

// Runs every setting on every instance of the grid; the reference value for
// the gap columns is the best incumbent found across settings of the same
// instance. Solver failures are recorded in the status column and the grid
// continues.
BenchOutput run_experiment(const BenchConfig& config);

}  // namespace liftcut
