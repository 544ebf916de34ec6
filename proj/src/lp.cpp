#include "liftcut/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liftcut {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFeasTol = 1e-9;
constexpr double kDualTol = 1e-9;
constexpr double kPivotTol = 1e-10;

class Simplex {
 public:
  explicit Simplex(const LpModel& model) : m_(static_cast<int>(model.rows.size())) {
    nstruct_ = model.ncols();
    int ncols = nstruct_ + m_;
    lo_ = model.lo;
    hi_ = model.hi;
    cost_.assign(ncols, 0.0);
    for (int j = 0; j < nstruct_; ++j) cost_[j] = model.obj[j];
    lo_.resize(ncols);
    hi_.resize(ncols);
    cols_.assign(ncols, std::vector<double>(m_, 0.0));
    b_.resize(m_);
    for (int r = 0; r < m_; ++r) {
      const auto& row = model.rows[r];
      for (int j = 0; j < nstruct_; ++j) cols_[j][r] = row.coef[j];
      int sj = nstruct_ + r;
      cols_[sj][r] = 1.0;
      switch (row.sense) {
        case LpModel::Sense::LE: lo_[sj] = 0.0; hi_[sj] = kInf; break;
        case LpModel::Sense::GE: lo_[sj] = -kInf; hi_[sj] = 0.0; break;
        case LpModel::Sense::EQ: lo_[sj] = 0.0; hi_[sj] = 0.0; break;
      }
      b_[r] = row.rhs;
    }
  }

  LpResult solve() {
    setup_start();
    if (need_phase1_) {
      LpStatus st = iterate(true);
      if (st == LpStatus::IterLimit) return {LpStatus::IterLimit, 0.0, {}};
      double infeas = 0.0;
      for (int j : artificials_) infeas += value_of(j);
      if (infeas > 1e-7) return {LpStatus::Infeasible, 0.0, {}};
      for (int j : artificials_) {
        lo_[j] = 0.0;
        hi_[j] = 0.0;
        cost_[j] = 0.0;
      }
    }
    LpStatus st = iterate(false);
    LpResult res;
    res.status = st;
    if (st == LpStatus::Optimal) {
      res.x.assign(nstruct_, 0.0);
      for (int j = 0; j < nstruct_; ++j) res.x[j] = value_of(j);
      res.obj = 0.0;
      for (int j = 0; j < nstruct_; ++j) res.obj += cost_[j] * res.x[j];
    }
    return res;
  }

 private:
  int ncols() const { return static_cast<int>(cols_.size()); }

  double value_of(int j) const {
    int r = in_basis_[j];
    return r >= 0 ? xb_[r] : xn_[j];
  }

  // Nonbasic start: every column at its finite bound nearest zero (zero for
  // free columns); slacks basic, with artificials patching infeasible rows.
  void setup_start() {
    int nc = ncols();
    xn_.assign(nc, 0.0);
    in_basis_.assign(nc, -1);
    for (int j = 0; j < nc; ++j) {
      if (std::isfinite(lo_[j]) && std::isfinite(hi_[j]))
        xn_[j] = std::fabs(lo_[j]) <= std::fabs(hi_[j]) ? lo_[j] : hi_[j];
      else if (std::isfinite(lo_[j]))
        xn_[j] = lo_[j];
      else if (std::isfinite(hi_[j]))
        xn_[j] = hi_[j];
    }
    // Residual each slack would need to absorb.
    std::vector<double> v(m_);
    for (int r = 0; r < m_; ++r) {
      double act = 0.0;
      for (int j = 0; j < nstruct_; ++j) act += cols_[j][r] * xn_[j];
      v[r] = b_[r] - act;
    }
    basis_.resize(m_);
    need_phase1_ = false;
    for (int r = 0; r < m_; ++r) {
      int sj = nstruct_ + r;
      if (v[r] >= lo_[sj] - kFeasTol && v[r] <= hi_[sj] + kFeasTol) {
        basis_[r] = sj;
        continue;
      }
      double clamped = std::clamp(v[r], lo_[sj], hi_[sj]);
      xn_[sj] = clamped;
      double resid = v[r] - clamped;
      int aj = ncols();
      cols_.emplace_back(m_, 0.0);
      cols_[aj][r] = resid > 0 ? 1.0 : -1.0;
      lo_.push_back(0.0);
      hi_.push_back(kInf);
      cost_.push_back(0.0);
      xn_.push_back(0.0);
      in_basis_.push_back(-1);
      artificials_.push_back(aj);
      basis_[r] = aj;
      need_phase1_ = true;
    }
    refactorize();
  }

  void refactorize() {
    // Invert the basis by Gauss-Jordan with partial pivoting.
    std::vector<std::vector<double>> a(m_, std::vector<double>(2 * m_, 0.0));
    for (int r = 0; r < m_; ++r) {
      for (int i = 0; i < m_; ++i) a[i][r] = cols_[basis_[r]][i];
      a[r][m_ + r] = 1.0;
    }
    for (int c = 0; c < m_; ++c) {
      int best = c;
      for (int r = c + 1; r < m_; ++r)
        if (std::fabs(a[r][c]) > std::fabs(a[best][c])) best = r;
      if (std::fabs(a[best][c]) < 1e-12) throw std::runtime_error("simplex: singular basis");
      std::swap(a[c], a[best]);
      double piv = a[c][c];
      for (int k = 0; k < 2 * m_; ++k) a[c][k] /= piv;
      for (int r = 0; r < m_; ++r) {
        if (r == c || a[r][c] == 0.0) continue;
        double f = a[r][c];
        for (int k = 0; k < 2 * m_; ++k) a[r][k] -= f * a[c][k];
      }
    }
    binv_.assign(m_, std::vector<double>(m_));
    for (int r = 0; r < m_; ++r)
      for (int c = 0; c < m_; ++c) binv_[r][c] = a[r][m_ + c];
    recompute_xb();
  }

  void recompute_xb() {
    std::vector<double> rhs = b_;
    for (int j = 0; j < ncols(); ++j) {
      if (in_basis_valid_ && in_basis_[j] >= 0) continue;
      bool basic = false;
      for (int r = 0; r < m_; ++r)
        if (basis_[r] == j) basic = true;
      if (basic) continue;
      if (xn_[j] != 0.0)
        for (int r = 0; r < m_; ++r) rhs[r] -= cols_[j][r] * xn_[j];
    }
    xb_.assign(m_, 0.0);
    for (int r = 0; r < m_; ++r)
      for (int c = 0; c < m_; ++c) xb_[r] += binv_[r][c] * rhs[c];
    in_basis_.assign(ncols(), -1);
    for (int r = 0; r < m_; ++r) in_basis_[basis_[r]] = r;
    in_basis_valid_ = true;
  }

  LpStatus iterate(bool phase1) {
    std::vector<double> cost;
    if (phase1) {
      cost.assign(ncols(), 0.0);
      for (int j : artificials_) cost[j] = -1.0;  // maximize -sum of artificials
    } else {
      cost = cost_;
    }

    long bland_after = 10L * (m_ + ncols());
    long max_iter = std::max(200000L, 200L * (m_ + ncols()));
    int since_refactor = 0;

    for (long iter = 0; iter < max_iter; ++iter) {
      bool bland = iter >= bland_after;

      // Duals y = c_B B^{-1}, reduced costs for nonbasic columns.
      std::vector<double> y(m_, 0.0);
      for (int r = 0; r < m_; ++r) {
        double cb = cost[basis_[r]];
        if (cb != 0.0)
          for (int c = 0; c < m_; ++c) y[c] += cb * binv_[r][c];
      }
      int enter = -1, dir = 0;
      double best_score = kDualTol;
      for (int j = 0; j < ncols(); ++j) {
        if (in_basis_[j] >= 0) continue;
        if (lo_[j] == hi_[j]) continue;  // fixed
        double d = cost[j];
        for (int r = 0; r < m_; ++r)
          if (cols_[j][r] != 0.0) d -= y[r] * cols_[j][r];
        bool at_lo = std::isfinite(lo_[j]) && xn_[j] <= lo_[j] + kFeasTol;
        bool at_hi = std::isfinite(hi_[j]) && xn_[j] >= hi_[j] - kFeasTol;
        bool free_var = !at_lo && !at_hi;
        int cand_dir = 0;
        if ((at_lo || free_var) && d > kDualTol) cand_dir = 1;
        else if ((at_hi || free_var) && d < -kDualTol) cand_dir = -1;
        if (cand_dir == 0) continue;
        if (bland) {
          enter = j;
          dir = cand_dir;
          break;
        }
        if (std::fabs(d) > best_score) {
          best_score = std::fabs(d);
          enter = j;
          dir = cand_dir;
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      // w = B^{-1} A_enter.
      std::vector<double> w(m_, 0.0);
      for (int r = 0; r < m_; ++r) {
        double a = cols_[enter][r];
        if (a != 0.0)
          for (int i = 0; i < m_; ++i) w[i] += binv_[i][r] * a;
      }

      // Ratio test: the entering variable's own range competes with the
      // basics hitting their bounds. Ties go to the smallest basis column.
      double own_range = hi_[enter] - lo_[enter];
      double best_step = std::isfinite(own_range) ? own_range : kInf;
      int leave_row = -1;
      int leave_dir = 0;  // bound the leaving variable lands on: -1 lo, +1 hi
      for (int i = 0; i < m_; ++i) {
        double rate = dir * w[i];  // x_B[i] decreases at this rate
        if (rate > kPivotTol) {
          if (!std::isfinite(lo_[basis_[i]])) continue;
          double step = (xb_[i] - lo_[basis_[i]]) / rate;
          if (step < -kFeasTol) step = 0.0;
          if (step < best_step - 1e-12 ||
              (leave_row >= 0 && step < best_step + 1e-12 && basis_[i] < basis_[leave_row])) {
            best_step = std::max(step, 0.0);
            leave_row = i;
            leave_dir = -1;
          }
        } else if (rate < -kPivotTol) {
          if (!std::isfinite(hi_[basis_[i]])) continue;
          double step = (hi_[basis_[i]] - xb_[i]) / (-rate);
          if (step < -kFeasTol) step = 0.0;
          if (step < best_step - 1e-12 ||
              (leave_row >= 0 && step < best_step + 1e-12 && basis_[i] < basis_[leave_row])) {
            best_step = std::max(step, 0.0);
            leave_row = i;
            leave_dir = 1;
          }
        }
      }

      if (!std::isfinite(best_step)) return LpStatus::Unbounded;

      if (leave_row < 0) {
        // Bound flip of the entering variable.
        double step = best_step;
        for (int i = 0; i < m_; ++i) xb_[i] -= dir * step * w[i];
        xn_[enter] = dir > 0 ? hi_[enter] : lo_[enter];
        continue;
      }

      double step = best_step;
      for (int i = 0; i < m_; ++i) xb_[i] -= dir * step * w[i];
      double enter_val = xn_[enter] + dir * step;
      int leave_col = basis_[leave_row];
      xn_[leave_col] = leave_dir < 0 ? lo_[leave_col] : hi_[leave_col];
      in_basis_[leave_col] = -1;
      basis_[leave_row] = enter;
      in_basis_[enter] = leave_row;
      xb_[leave_row] = enter_val;

      // Rank-one update of B^{-1}.
      double piv = w[leave_row];
      if (std::fabs(piv) < 1e-11 || ++since_refactor >= 64) {
        refactorize();
        since_refactor = 0;
      } else {
        for (int c = 0; c < m_; ++c) binv_[leave_row][c] /= piv;
        for (int i = 0; i < m_; ++i) {
          if (i == leave_row || w[i] == 0.0) continue;
          double f = w[i];
          for (int c = 0; c < m_; ++c) binv_[i][c] -= f * binv_[leave_row][c];
        }
      }
    }
    return LpStatus::IterLimit;
  }

  int m_;
  int nstruct_;
  std::vector<std::vector<double>> cols_;
  std::vector<double> lo_, hi_, cost_, b_;
  std::vector<int> basis_;
  std::vector<int> in_basis_;
  std::vector<double> xb_, xn_;
  std::vector<std::vector<double>> binv_;
  std::vector<int> artificials_;
  bool need_phase1_ = false;
  bool in_basis_valid_ = false;
};

}  // namespace

LpResult solve_lp(const LpModel& model) {
  if (model.rows.empty()) {
    // Pure bound problem.
    LpResult res;
    res.status = LpStatus::Optimal;
    res.x.assign(model.ncols(), 0.0);
    res.obj = 0.0;
    for (int j = 0; j < model.ncols(); ++j) {
      double v;
      if (model.obj[j] > 0)
        v = model.hi[j];
      else if (model.obj[j] < 0)
        v = model.lo[j];
      else
        v = std::isfinite(model.lo[j]) ? model.lo[j] : 0.0;
      if (!std::isfinite(v)) return {LpStatus::Unbounded, 0.0, {}};
      for (int jj = 0; jj < model.ncols(); ++jj)
        if (model.lo[jj] > model.hi[jj]) return {LpStatus::Infeasible, 0.0, {}};
      res.x[j] = v;
      res.obj += model.obj[j] * v;
    }
    return res;
  }
  for (int j = 0; j < model.ncols(); ++j)
    if (model.lo[j] > model.hi[j] + 1e-12) return {LpStatus::Infeasible, 0.0, {}};
  Simplex s(model);
  return s.solve();
}

}  // namespace liftcut
