#include "liftcut/bnc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "liftcut/constants.hpp"
#include "liftcut/lp.hpp"
#include "liftcut/separation.hpp"

namespace liftcut {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// One nonlinear row w <= f(sum a_l x_cols[l]) of the model.
struct XRowModel {
  std::vector<int> xcols;
  std::vector<double> a;
  int wcol = -1;
  bool exp_form = true;  // f(z) = 1 - exp(-z), exact tangents available
  std::shared_ptr<const InstanceX> inst;

  double f_at(const std::vector<double>& xglobal) const {
    double z = 0.0;
    for (size_t l = 0; l < xcols.size(); ++l) z += a[l] * xglobal[xcols[l]];
    return inst->original_f()(z);
  }
  std::vector<double> local_x(const std::vector<double>& xglobal) const {
    std::vector<double> out(xcols.size());
    for (size_t l = 0; l < xcols.size(); ++l) out[l] = xglobal[xcols[l]];
    return out;
  }
};

struct BncModel {
  LpModel base;
  std::vector<XRowModel> rows;
  std::vector<int> int_cols;
  int n_base_rows = 0;
};

BncModel build_model(const Problem& problem) {
  BncModel m;
  if (const auto* e = std::get_if<EumInstance>(&problem)) {
    for (int i = 0; i < e->n; ++i) {
      m.base.add_col(0.0, 1.0, 0.0);
      m.int_cols.push_back(i);
    }
    for (int j = 0; j < e->m; ++j) m.base.add_col(0.0, 1.0, e->pi[j]);
    std::vector<double> budget(m.base.ncols(), 0.0);
    for (int i = 0; i < e->n; ++i) budget[i] = e->a[i];
    m.base.add_row(budget, LpModel::Sense::LE, 1.0);
    for (int j = 0; j < e->m; ++j) {
      XRowModel row;
      row.wcol = e->n + j;
      std::vector<double> av;
      std::vector<int> mu;
      for (int i = 0; i < e->n; ++i) {
        row.xcols.push_back(i);
        av.push_back(e->v[j][i] / e->lambda);
        mu.push_back(1);
      }
      row.a = av;
      row.inst = std::make_shared<InstanceX>(av, mu, ConcaveFn::exp_utility(1.0, 0.0));
      m.rows.push_back(std::move(row));
    }
  } else if (const auto* w = std::get_if<WtaInstance>(&problem)) {
    for (int i = 0; i < w->n; ++i)
      for (int j = 0; j < w->m; ++j) {
        int col = m.base.add_col(0.0, w->mu[i], 0.0);
        m.int_cols.push_back(col);
      }
    for (int j = 0; j < w->m; ++j) m.base.add_col(0.0, 1.0, w->value[j]);
    for (int i = 0; i < w->n; ++i) {
      std::vector<double> row(m.base.ncols(), 0.0);
      for (int j = 0; j < w->m; ++j) row[i * w->m + j] = 1.0;
      m.base.add_row(row, LpModel::Sense::LE, w->mu[i]);
    }
    for (int j = 0; j < w->m; ++j) {
      XRowModel row;
      row.wcol = w->n * w->m + j;
      std::vector<double> av;
      std::vector<int> mu;
      for (int i = 0; i < w->n; ++i) {
        row.xcols.push_back(i * w->m + j);
        av.push_back(w->a[i][j]);
        mu.push_back(w->mu[i]);
      }
      row.a = av;
      row.inst = std::make_shared<InstanceX>(av, mu, ConcaveFn::exp_utility(1.0, 0.0));
      m.rows.push_back(std::move(row));
    }
  } else {
    const auto& r = std::get<RawXProblem>(problem);
    const InstanceX& inst = r.inst;
    for (int i = 0; i < inst.n(); ++i) {
      int col = m.base.add_col(0.0, inst.mu(i), 0.0);
      m.int_cols.push_back(col);
    }
    // Bound w by the concave maximum of f over the box argument range,
    // located by ternary search.
    double zmax = 0.0;
    for (int i = 0; i < inst.n(); ++i) zmax += inst.a(i) * inst.mu(i);
    double lo = 0.0, hi = zmax;
    for (int it = 0; it < 200; ++it) {
      double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
      if (inst.f()(m1) < inst.f()(m2))
        lo = m1;
      else
        hi = m2;
    }
    double wmax = inst.f()((lo + hi) / 2) + 1e-6;
    double wmin = std::min(inst.f()(0.0), inst.f()(zmax)) - 1.0;
    m.base.add_col(wmin, wmax, 1.0);
    XRowModel row;
    row.wcol = inst.n();
    for (int i = 0; i < inst.n(); ++i) row.xcols.push_back(i);
    row.a = inst.a();
    row.exp_form = false;
    row.inst = std::make_shared<InstanceX>(inst);
    m.rows.push_back(std::move(row));
  }
  m.n_base_rows = static_cast<int>(m.base.rows.size());
  return m;
}

// Chord supergradient linearization, valid for any concave f and exactly
// tight at xbar.
Cut gradient_cut(const ConcaveFn& f, const std::vector<double>& a,
                 const std::vector<double>& xbar) {
  double z = 0.0;
  for (size_t l = 0; l < a.size(); ++l) z += a[l] * xbar[l];
  double h = 1e-6 * std::max(1.0, std::fabs(z));
  double slope = (f(z + h) - f(z - h)) / (2 * h);
  Cut cut;
  cut.alpha.resize(a.size());
  for (size_t l = 0; l < a.size(); ++l) cut.alpha[l] = slope * a[l];
  cut.alpha0 = f(z) - slope * z;
  cut.family = "gradient";
  return cut;
}

struct Node {
  std::vector<double> lo, hi;  // integer-column bounds
  double bound;
  long id;
};

class Solver {
 public:
  Solver(const Problem& problem, const BncConfig& cfg)
      : cfg_(cfg), model_(build_model(problem)), work_(model_.base) {}

  BncResult run() {
    auto t0 = std::chrono::steady_clock::now();
    SolveStats stats;
    stats.incumbent = -kInf;

    Node root;
    for (int c : model_.int_cols) {
      root.lo.push_back(model_.base.lo[c]);
      root.hi.push_back(model_.base.hi[c]);
    }
    root.bound = kInf;
    root.id = 0;
    std::vector<Node> open{root};
    long next_id = 1;
    bool hit_limit = false;

    while (!open.empty()) {
      if (seconds_since(t0) > cfg_.time_limit || stats.nodes >= cfg_.node_limit) {
        hit_limit = true;
        break;
      }
      size_t pick = open.size() - 1;
      if (stats.nodes > 0 && stats.nodes % 100 == 0) {
        for (size_t i = 0; i < open.size(); ++i)
          if (open[i].bound > open[pick].bound) pick = i;
      }
      Node node = open[pick];
      open.erase(open.begin() + pick);
      if (node.bound <= incumbent_ + kAbsGap) {
        ++stats.nodes;
        record_ub(stats, open);
        continue;
      }

      process_node(node, open, next_id, t0);
      ++stats.nodes;
      record_ub(stats, open);
    }

    stats.wall_time = seconds_since(t0);
    stats.incumbent = incumbent_;
    double ub = incumbent_;
    for (const Node& nd : open) ub = std::max(ub, nd.bound);
    stats.proven_bound = hit_limit ? ub : incumbent_;
    stats.status = hit_limit ? "limit" : "optimal";
    stats.root_bound = root_bound_;
    stats.cuts_added = cuts_added_;
    stats.separation_time = sep_time_;

    BncResult res;
    res.objective = incumbent_;
    res.x = incumbent_x_;
    res.stats = stats;
    return res;
  }

 private:
  void record_ub(SolveStats& stats, const std::vector<Node>& open) {
    double ub = incumbent_;
    for (const Node& nd : open) ub = std::max(ub, nd.bound);
    stats.ub_trace.push_back(ub);
  }

  void apply_bounds(const Node& node) {
    for (size_t t = 0; t < model_.int_cols.size(); ++t) {
      work_.lo[model_.int_cols[t]] = node.lo[t];
      work_.hi[model_.int_cols[t]] = node.hi[t];
    }
  }

  bool integral(const std::vector<double>& x) const {
    for (int c : model_.int_cols)
      if (std::fabs(x[c] - std::round(x[c])) > kIntTol) return false;
    return true;
  }

  void add_cut_row(const Cut& cut, const XRowModel& row) {
    std::vector<double> coef(work_.ncols(), 0.0);
    coef[row.wcol] = 1.0;
    for (size_t l = 0; l < row.xcols.size(); ++l) coef[row.xcols[l]] -= cut.alpha[l];
    work_.add_row(std::move(coef), LpModel::Sense::LE, cut.alpha0);
    ++cuts_added_;
  }

  void purge_cuts() {
    int max_cuts = 60 * static_cast<int>(model_.rows.size()) + 200;
    int have = static_cast<int>(work_.rows.size()) - model_.n_base_rows;
    if (have <= max_cuts) return;
    int keep = max_cuts / 2;
    work_.rows.erase(work_.rows.begin() + model_.n_base_rows,
                     work_.rows.end() - keep);
  }

  // Lazy linearization for a violated row at an integral point; exact at the
  // point, so it always cuts it off.
  void add_lazy_cut(const XRowModel& row, const std::vector<double>& x) {
    std::vector<double> xloc = row.local_x(x);
    if (row.exp_form && cfg_.use_oa) {
      std::vector<int> xi(xloc.size());
      for (size_t l = 0; l < xloc.size(); ++l) xi[l] = static_cast<int>(std::llround(xloc[l]));
      add_cut_row(oa_cut(row.a, xi), row);
      return;
    }
    if (!cfg_.families.empty()) {
      auto t0 = std::chrono::steady_clock::now();
      auto sep = separate(x[row.wcol], xloc, row.inst, cfg_.families, cfg_.prefer_exact);
      sep_time_ += seconds_since(t0);
      if (sep) {
        add_cut_row(sep->cut, row);
        return;
      }
    }
    // Fallback keeps the search correct when the families cannot reach the
    // point (several interior integral components, say).
    add_cut_row(gradient_cut(row.inst->original_f(), row.a, xloc), row);
  }

  void process_node(Node node, std::vector<Node>& open, long& next_id,
                    std::chrono::steady_clock::time_point t0) {
    apply_bounds(node);
    int rounds_left = node.id == 0 ? 10 : 2;
    int lazy_guard = 0;

    while (true) {
      if (seconds_since(t0) > cfg_.time_limit) return;
      LpResult lp = solve_lp(work_);
      if (lp.status == LpStatus::Infeasible) {
        if (node.id == 0) root_bound_ = -kInf;
        return;
      }
      if (lp.status != LpStatus::Optimal)
        throw std::runtime_error("branch_and_cut: LP did not solve to optimality");
      double bound = std::min(lp.obj, node.bound);
      node.bound = bound;
      if (node.id == 0) root_bound_ = bound;
      if (bound <= incumbent_ + kAbsGap) return;

      if (integral(lp.x)) {
        std::vector<double> x = lp.x;
        for (int c : model_.int_cols) x[c] = std::round(x[c]);
        bool feasible = true;
        for (const XRowModel& row : model_.rows) {
          if (x[row.wcol] > row.f_at(x) + 1e-7) {
            add_lazy_cut(row, x);
            feasible = false;
          }
        }
        if (!feasible) {
          if (++lazy_guard > 500)
            throw std::runtime_error("branch_and_cut: lazy loop failed to converge");
          continue;
        }
        double true_obj = 0.0;
        for (const XRowModel& row : model_.rows) {
          x[row.wcol] = row.f_at(x);
          true_obj += work_.obj[row.wcol] * x[row.wcol];
        }
        if (true_obj > incumbent_) {
          incumbent_ = true_obj;
          incumbent_x_ = x;
        }
        return;
      }

      if (rounds_left > 0) {
        --rounds_left;
        int added = 0;
        for (const XRowModel& row : model_.rows) {
          // Candidates for this row: best lifted cut and the rounded-point
          // linearization; add the more violated one.
          double best_viol = kViolMin;
          Cut best_cut;
          bool have = false;
          if (!cfg_.families.empty()) {
            auto ts = std::chrono::steady_clock::now();
            auto sep =
                separate(lp.x[row.wcol], row.local_x(lp.x), row.inst, cfg_.families,
                         cfg_.prefer_exact);
            sep_time_ += seconds_since(ts);
            if (sep && sep->violation > best_viol) {
              best_viol = sep->violation;
              best_cut = sep->cut;
              have = true;
            }
          }
          if (cfg_.use_oa && row.exp_form) {
            std::vector<double> xloc = row.local_x(lp.x);
            std::vector<int> xi(xloc.size());
            for (size_t l = 0; l < xloc.size(); ++l)
              xi[l] = static_cast<int>(std::llround(xloc[l]));
            Cut oa = oa_cut(row.a, xi);
            std::vector<double> xl = row.local_x(lp.x);
            double viol = lp.x[row.wcol] - oa.rhs(xl);
            if (viol > best_viol) {
              best_viol = viol;
              best_cut = oa;
              have = true;
            }
          }
          if (have) {
            add_cut_row(best_cut, row);
            ++added;
          }
        }
        if (added > 0) continue;
      }

      // Branch on the most fractional integer column, smallest index on ties.
      int best_t = -1;
      double best_frac = kIntTol;
      for (size_t t = 0; t < model_.int_cols.size(); ++t) {
        double v = lp.x[model_.int_cols[t]];
        double frac = std::fabs(v - std::round(v));
        if (frac > best_frac + 1e-12) {
          best_frac = frac;
          best_t = static_cast<int>(t);
        }
      }
      if (best_t < 0) throw std::logic_error("branch_and_cut: no fractional column to branch on");
      double v = lp.x[model_.int_cols[best_t]];
      Node up = node, down = node;
      up.lo[best_t] = std::ceil(v);
      up.bound = bound;
      up.id = next_id++;
      down.hi[best_t] = std::floor(v);
      down.bound = bound;
      down.id = next_id++;
      open.push_back(std::move(up));
      open.push_back(std::move(down));
      purge_cuts();
      return;
    }
  }

  BncConfig cfg_;
  BncModel model_;
  LpModel work_;
  double incumbent_ = -kInf;
  std::vector<double> incumbent_x_;
  double root_bound_ = kInf;
  long cuts_added_ = 0;
  double sep_time_ = 0.0;
};

}  // namespace

Cut oa_cut(const std::vector<double>& a, const std::vector<int>& xbar) {
  double z = 0.0;
  for (size_t l = 0; l < a.size(); ++l) z += a[l] * xbar[l];
  double fz = 1.0 - std::exp(-z);
  double slope = std::exp(-z);
  Cut cut;
  cut.alpha.resize(a.size());
  for (size_t l = 0; l < a.size(); ++l) cut.alpha[l] = slope * a[l];
  cut.alpha0 = fz - slope * z;
  cut.family = "oa";
  cut.context = {{"linearization_point", xbar}};
  return cut;
}

nlohmann::json SolveStats::to_json() const {
  return {{"cuts_added", cuts_added},     {"nodes", nodes},
          {"wall_time", wall_time},       {"separation_time", separation_time},
          {"root_bound", root_bound},     {"incumbent", incumbent},
          {"proven_bound", proven_bound}, {"status", status}};
}

BncResult branch_and_cut(const Problem& problem, const BncConfig& config) {
  if (!config.use_oa && config.families.empty())
    throw std::invalid_argument("branch_and_cut: need OA cuts or at least one cut family");
  Solver solver(problem, config);
  return solver.run();
}

}  // namespace liftcut
