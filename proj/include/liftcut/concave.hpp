#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace liftcut {

// Closed enumeration of concave functions on R. A closed set of variants
// (rather than an arbitrary callback) keeps instance serialization exact;
// PiecewiseLinear is the escape hatch for shapes not covered by a closed
// form. Values are immutable after construction and safe to share across
// threads.
class ConcaveFn {
 public:
  enum class Kind {
    ExpUtility,    // z -> 1 - exp(-(z - c) / lambda), lambda > 0
    NegExp,        // z -> -exp(-(z - c))
    MinLinear,     // z -> min{0, b - z}
    NegAbs,        // z -> -|b - z|
    NegQuadratic,  // z -> -(z - c)^2
    Shifted,       // z -> inner(z + c)
    Reflected,     // z -> inner(-z + c)
    PiecewiseLinear,
  };

  static ConcaveFn exp_utility(double lambda, double c);
  static ConcaveFn neg_exp(double c);
  static ConcaveFn min_linear(double b);
  static ConcaveFn neg_abs(double b);
  static ConcaveFn neg_quadratic(double c);
  // Breakpoints must have strictly increasing x and non-increasing slopes;
  // evaluation extrapolates past the ends with the edge slopes.
  static ConcaveFn piecewise_linear(std::vector<std::array<double, 2>> pts);

  double operator()(double z) const { return eval(z); }
  double eval(double z) const;

  Kind kind() const { return kind_; }
  double param0() const { return p0_; }
  double param1() const { return p1_; }
  const ConcaveFn& inner() const { return *inner_; }

  nlohmann::json to_json() const;
  static ConcaveFn from_json(const nlohmann::json& j);

 private:
  ConcaveFn(Kind kind, double p0, double p1) : kind_(kind), p0_(p0), p1_(p1) {}
  friend ConcaveFn shift(const ConcaveFn&, double);
  friend ConcaveFn reflect(const ConcaveFn&, double);

  Kind kind_;
  double p0_ = 0.0;
  double p1_ = 0.0;
  std::shared_ptr<const ConcaveFn> inner_;
  std::vector<std::array<double, 2>> pts_;
};

// Returns h with h(z) = f(z + c).
ConcaveFn shift(const ConcaveFn& f, double c);

// Returns h with h(z) = f(-z + c).
ConcaveFn reflect(const ConcaveFn& f, double c);

// Slope comparison for a concave f: with a1 <= b1, a2 <= b2, a1 <= a2,
// b1 <= b2, checks (b2 - a2)(f(b1) - f(a1)) >= (b1 - a1)(f(b2) - f(a2)),
// up to kTol. Throws std::invalid_argument on a precondition violation.
bool check_slope(const ConcaveFn& f, double a1, double a2, double b1, double b2);

// One weighted difference k * (f(hi) - f(lo)).
struct SlopeTerm {
  double weight;
  double lo;
  double hi;
};

// Checks that H = sum_plus k(f(hi)-f(lo)) - sum_minus k(f(hi)-f(lo)) is
// nonnegative (up to kTol) for a regrouped sum satisfying: weights >= 0,
// lo <= hi per term, every plus hi <= every minus hi, every plus lo <=
// every minus lo, and the weighted interval lengths balance to zero.
// Throws std::invalid_argument naming the first violated condition.
bool check_regrouped_sum(const ConcaveFn& f, const std::vector<SlopeTerm>& plus,
                         const std::vector<SlopeTerm>& minus);

}  // namespace liftcut
