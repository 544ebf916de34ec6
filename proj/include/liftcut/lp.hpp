#pragma once

#include <limits>
#include <string>
#include <vector>

namespace liftcut {

// Dense LP model, maximization. Bounds may be +/-infinity.
struct LpModel {
  enum class Sense { LE, GE, EQ };
  struct Row {
    std::vector<double> coef;  // dense over columns
    Sense sense;
    double rhs;
  };

  std::vector<double> lo, hi, obj;
  std::vector<Row> rows;

  int ncols() const { return static_cast<int>(lo.size()); }
  int add_col(double lo_, double hi_, double obj_) {
    lo.push_back(lo_);
    hi.push_back(hi_);
    obj.push_back(obj_);
    for (auto& r : rows) r.coef.push_back(0.0);
    return ncols() - 1;
  }
  int add_row(std::vector<double> coef, Sense sense, double rhs) {
    coef.resize(lo.size(), 0.0);
    rows.push_back(Row{std::move(coef), sense, rhs});
    return static_cast<int>(rows.size()) - 1;
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterLimit };

struct LpResult {
  LpStatus status = LpStatus::IterLimit;
  double obj = 0.0;
  std::vector<double> x;
};

// Bounded-variable two-phase primal simplex with a dense explicit basis
// inverse. Dantzig pricing switches to Bland's rule after 10 (rows + cols)
// iterations so termination is guaranteed; all tie-breaks are by smallest
// index, making the solve deterministic.
LpResult solve_lp(const LpModel& model);

}  // namespace liftcut
