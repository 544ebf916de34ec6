#include "liftcut/bench.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "liftcut/rng.hpp"

namespace liftcut {

EumInstance gen_eum(int n, int m, double lambda, uint64_t seed) {
  SplitMix64 rng(seed);
  EumInstance e;
  e.n = n;
  e.m = m;
  e.lambda = lambda;
  e.seed = seed;
  e.a.resize(n);
  for (int i = 0; i < n; ++i) e.a[i] = rng.uniform(0.1, 0.15);
  e.pi.assign(m, 1.0 / m);
  std::vector<double> p(n), alpha(n), beta(n);
  for (int i = 0; i < n; ++i) p[i] = rng.uniform(0.0, 0.2);
  for (int i = 0; i < n; ++i) alpha[i] = rng.uniform(0.05, 0.1);
  for (int i = 0; i < n; ++i) beta[i] = rng.uniform(0.0, 1.0);
  e.v.assign(m, std::vector<double>(n));
  for (int j = 0; j < m; ++j) {
    double ln_f = rng.normal(0.05, 0.05);  // one scenario factor per j
    for (int i = 0; i < n; ++i) {
      double eps = rng.normal(0.0, 0.05);
      e.v[j][i] = p[i] * std::exp(alpha[i] + beta[i] * ln_f + eps);
    }
  }
  return e;
}

WtaInstance gen_wta(int n, int m, double rho, uint64_t seed) {
  SplitMix64 rng(seed);
  WtaInstance w;
  w.n = n;
  w.m = m;
  w.rho = rho;
  w.seed = seed;
  w.p.assign(n, std::vector<double>(m));
  w.a.assign(n, std::vector<double>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      double pij = rng.uniform(0.0, 1.0);
      if (pij <= 0.0) pij = 1e-12;  // keep -ln(1-p) finite and positive
      if (pij >= 1.0) pij = 1.0 - 1e-12;
      w.p[i][j] = pij;
      w.a[i][j] = -std::log1p(-pij);
    }
  w.value.resize(m);
  for (int j = 0; j < m; ++j) w.value[j] = rng.uniform_int(1, 100);
  w.mu.resize(n);
  for (int i = 0; i < n; ++i) w.mu[i] = rng.next_double() < rho ? 2 : 1;
  return w;
}

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

}  // namespace

BenchOutput run_experiment(const BenchConfig& config) {
  BenchOutput out;
  std::ostringstream csv;
  csv << "n,m,param,instance,setting,C,N,T,ST,Rgap,Egap,status\n";

  struct CellKey {
    int n, m;
    double param;
    std::string setting;
    bool operator<(const CellKey& o) const {
      return std::tie(n, m, param, setting) < std::tie(o.n, o.m, o.param, o.setting);
    }
  };
  struct CellAgg {
    long c = 0, nn = 0;
    double t = 0, st = 0, rgap = 0, egap = 0;
    int count = 0, unsolved = 0;
  };
  std::map<CellKey, CellAgg> agg;

  int cell_idx = 0;
  for (const auto& [n, m, param] : config.grid) {
    for (int r = 0; r < config.instances_per_cell; ++r) {
      uint64_t inst_seed = config.seed + 1000003ULL * cell_idx + r;
      Problem problem = config.problem == "eum"
                            ? Problem(gen_eum(n, m, param, inst_seed))
                            : Problem(gen_wta(n, m, param, inst_seed));

      std::vector<BncResult> results;
      std::vector<std::string> errors(config.settings.size());
      double z_opt = -HUGE_VAL;
      for (size_t s = 0; s < config.settings.size(); ++s) {
        BncConfig bc = config.settings[s].config;
        bc.time_limit = config.time_limit;
        bc.seed = inst_seed;
        try {
          results.push_back(branch_and_cut(problem, bc));
          z_opt = std::max(z_opt, results.back().stats.incumbent);
        } catch (const std::exception& ex) {
          results.push_back(BncResult{});
          errors[s] = ex.what();
        }
      }

      for (size_t s = 0; s < config.settings.size(); ++s) {
        const auto& st = results[s].stats;
        BenchRow row;
        row.n = n;
        row.m = m;
        row.param = param;
        row.instance = r;
        row.setting = config.settings[s].name;
        row.cuts = st.cuts_added;
        row.nodes = st.nodes;
        row.time = config.report_times ? st.wall_time : 0.0;
        row.sep_time = config.report_times ? st.separation_time : 0.0;
        double denom = std::max(std::fabs(z_opt), 1e-12);
        row.rgap = (st.root_bound - z_opt) / denom * 100.0;
        row.egap = (st.proven_bound - z_opt) / denom * 100.0;
        row.status = errors[s].empty() ? st.status : "error";
        out.rows.push_back(row);

        csv << row.n << ',' << row.m << ',' << fmt("%.4g", row.param) << ',' << row.instance
            << ',' << row.setting << ',' << row.cuts << ',' << row.nodes << ','
            << fmt("%.3f", row.time) << ',' << fmt("%.3f", row.sep_time) << ','
            << fmt("%.6f", row.rgap) << ',' << fmt("%.6f", row.egap) << ',' << row.status
            << '\n';

        CellAgg& a = agg[{n, m, param, row.setting}];
        a.c += row.cuts;
        a.nn += row.nodes;
        a.t += row.time;
        a.st += row.sep_time;
        a.rgap += row.rgap;
        a.egap += row.egap;
        a.count += 1;
        if (row.status != "optimal") a.unsolved += 1;
      }
    }
    ++cell_idx;
  }
  out.csv = csv.str();

  std::ostringstream tbl;
  tbl << "n\tm\tparam\tsetting\tC\tN\tT\tST\tRgap%\tEgap%\n";
  for (const auto& [key, a] : agg) {
    tbl << key.n << '\t' << key.m << '\t' << fmt("%.4g", key.param) << '\t' << key.setting
        << '\t' << a.c / a.count << '\t' << a.nn / a.count << '\t' << fmt("%.2f", a.t / a.count)
        << '\t' << fmt("%.2f", a.st / a.count) << '\t' << fmt("%.2f", a.rgap / a.count) << '\t'
        << fmt("%.2f", a.egap / a.count);
    if (a.unsolved > 0) tbl << "^{" << a.unsolved << "}";
    tbl << '\n';
  }
  out.table = tbl.str();
  return out;
}

}  // namespace liftcut
