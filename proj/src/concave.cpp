#include "liftcut/concave.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "liftcut/constants.hpp"

namespace liftcut {

ConcaveFn ConcaveFn::exp_utility(double lambda, double c) {
  if (!(lambda > 0.0)) throw std::invalid_argument("exp_utility: lambda must be positive");
  return ConcaveFn(Kind::ExpUtility, lambda, c);
}

ConcaveFn ConcaveFn::neg_exp(double c) { return ConcaveFn(Kind::NegExp, c, 0.0); }
ConcaveFn ConcaveFn::min_linear(double b) { return ConcaveFn(Kind::MinLinear, b, 0.0); }
ConcaveFn ConcaveFn::neg_abs(double b) { return ConcaveFn(Kind::NegAbs, b, 0.0); }
ConcaveFn ConcaveFn::neg_quadratic(double c) { return ConcaveFn(Kind::NegQuadratic, c, 0.0); }

ConcaveFn ConcaveFn::piecewise_linear(std::vector<std::array<double, 2>> pts) {
  if (pts.size() < 2) throw std::invalid_argument("piecewise_linear: need at least two points");
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i][0] < pts[i + 1][0]))
      throw std::invalid_argument("piecewise_linear: x must be strictly increasing");
  }
  double prev_slope = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    double slope = (pts[i + 1][1] - pts[i][1]) / (pts[i + 1][0] - pts[i][0]);
    if (slope > prev_slope + kBranchSnap)
      throw std::invalid_argument("piecewise_linear: slopes must be non-increasing");
    prev_slope = slope;
  }
  ConcaveFn fn(Kind::PiecewiseLinear, 0.0, 0.0);
  fn.pts_ = std::move(pts);
  return fn;
}

double ConcaveFn::eval(double z) const {
  switch (kind_) {
    case Kind::ExpUtility:
      return 1.0 - std::exp(-(z - p1_) / p0_);
    case Kind::NegExp:
      return -std::exp(-(z - p0_));
    case Kind::MinLinear:
      return std::min(0.0, p0_ - z);
    case Kind::NegAbs:
      return -std::fabs(p0_ - z);
    case Kind::NegQuadratic:
      return -(z - p0_) * (z - p0_);
    case Kind::Shifted:
      return inner_->eval(z + p0_);
    case Kind::Reflected:
      return inner_->eval(-z + p0_);
    case Kind::PiecewiseLinear: {
      size_t m = pts_.size();
      if (z <= pts_[0][0]) {
        double s = (pts_[1][1] - pts_[0][1]) / (pts_[1][0] - pts_[0][0]);
        return pts_[0][1] + s * (z - pts_[0][0]);
      }
      if (z >= pts_[m - 1][0]) {
        double s = (pts_[m - 1][1] - pts_[m - 2][1]) / (pts_[m - 1][0] - pts_[m - 2][0]);
        return pts_[m - 1][1] + s * (z - pts_[m - 1][0]);
      }
      size_t lo = 0, hi = m - 1;
      while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        if (pts_[mid][0] <= z)
          lo = mid;
        else
          hi = mid;
      }
      double t = (z - pts_[lo][0]) / (pts_[hi][0] - pts_[lo][0]);
      return pts_[lo][1] + t * (pts_[hi][1] - pts_[lo][1]);
    }
  }
  return 0.0;  // unreachable
}

ConcaveFn shift(const ConcaveFn& f, double c) {
  ConcaveFn out(ConcaveFn::Kind::Shifted, c, 0.0);
  out.inner_ = std::make_shared<ConcaveFn>(f);
  return out;
}

ConcaveFn reflect(const ConcaveFn& f, double c) {
  ConcaveFn out(ConcaveFn::Kind::Reflected, c, 0.0);
  out.inner_ = std::make_shared<ConcaveFn>(f);
  return out;
}

bool check_slope(const ConcaveFn& f, double a1, double a2, double b1, double b2) {
  if (!(a1 <= b1)) throw std::invalid_argument("check_slope: requires a1 <= b1");
  if (!(a2 <= b2)) throw std::invalid_argument("check_slope: requires a2 <= b2");
  if (!(a1 <= a2)) throw std::invalid_argument("check_slope: requires a1 <= a2");
  if (!(b1 <= b2)) throw std::invalid_argument("check_slope: requires b1 <= b2");
  double lhs = (b2 - a2) * (f(b1) - f(a1));
  double rhs = (b1 - a1) * (f(b2) - f(a2));
  return lhs >= rhs - kTol;
}

bool check_regrouped_sum(const ConcaveFn& f, const std::vector<SlopeTerm>& plus,
                         const std::vector<SlopeTerm>& minus) {
  double max_plus_hi = -std::numeric_limits<double>::infinity();
  double max_plus_lo = -std::numeric_limits<double>::infinity();
  double min_minus_hi = std::numeric_limits<double>::infinity();
  double min_minus_lo = std::numeric_limits<double>::infinity();
  double balance = 0.0;

  for (const auto* group : {&plus, &minus}) {
    bool is_plus = group == &plus;
    for (const SlopeTerm& t : *group) {
      if (!(t.weight >= 0.0))
        throw std::invalid_argument("check_regrouped_sum: weights must be nonnegative");
      if (!(t.lo <= t.hi))
        throw std::invalid_argument("check_regrouped_sum: each term needs lo <= hi");
      if (is_plus) {
        max_plus_hi = std::max(max_plus_hi, t.hi);
        max_plus_lo = std::max(max_plus_lo, t.lo);
        balance += t.weight * (t.hi - t.lo);
      } else {
        min_minus_hi = std::min(min_minus_hi, t.hi);
        min_minus_lo = std::min(min_minus_lo, t.lo);
        balance -= t.weight * (t.hi - t.lo);
      }
    }
  }
  if (max_plus_hi > min_minus_hi + kTol)
    throw std::invalid_argument("check_regrouped_sum: plus-side hi exceeds minus-side hi");
  if (max_plus_lo > min_minus_lo + kTol)
    throw std::invalid_argument("check_regrouped_sum: plus-side lo exceeds minus-side lo");
  if (std::fabs(balance) > kTol)
    throw std::invalid_argument("check_regrouped_sum: weighted interval lengths do not balance");

  double h = 0.0;
  for (const SlopeTerm& t : plus) h += t.weight * (f(t.hi) - f(t.lo));
  for (const SlopeTerm& t : minus) h -= t.weight * (f(t.hi) - f(t.lo));
  return h >= -kTol;
}

namespace {

std::string kind_name(ConcaveFn::Kind k) {
  switch (k) {
    case ConcaveFn::Kind::ExpUtility: return "exp_utility";
    case ConcaveFn::Kind::NegExp: return "neg_exp";
    case ConcaveFn::Kind::MinLinear: return "min_linear";
    case ConcaveFn::Kind::NegAbs: return "neg_abs";
    case ConcaveFn::Kind::NegQuadratic: return "neg_quadratic";
    case ConcaveFn::Kind::Shifted: return "shifted";
    case ConcaveFn::Kind::Reflected: return "reflected";
    case ConcaveFn::Kind::PiecewiseLinear: return "piecewise_linear";
  }
  return "?";
}

}  // namespace

nlohmann::json ConcaveFn::to_json() const {
  nlohmann::json j;
  j["kind"] = kind_name(kind_);
  switch (kind_) {
    case Kind::ExpUtility:
      j["lambda"] = p0_;
      j["c"] = p1_;
      break;
    case Kind::NegExp:
    case Kind::NegQuadratic:
      j["c"] = p0_;
      break;
    case Kind::MinLinear:
    case Kind::NegAbs:
      j["b"] = p0_;
      break;
    case Kind::Shifted:
    case Kind::Reflected:
      j["c"] = p0_;
      j["inner"] = inner_->to_json();
      break;
    case Kind::PiecewiseLinear:
      j["points"] = pts_;
      break;
  }
  return j;
}

ConcaveFn ConcaveFn::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "exp_utility")
    return exp_utility(j.at("lambda").get<double>(), j.at("c").get<double>());
  if (kind == "neg_exp") return neg_exp(j.at("c").get<double>());
  if (kind == "min_linear") return min_linear(j.at("b").get<double>());
  if (kind == "neg_abs") return neg_abs(j.at("b").get<double>());
  if (kind == "neg_quadratic") return neg_quadratic(j.at("c").get<double>());
  if (kind == "shifted") return shift(from_json(j.at("inner")), j.at("c").get<double>());
  if (kind == "reflected") return reflect(from_json(j.at("inner")), j.at("c").get<double>());
  if (kind == "piecewise_linear")
    return piecewise_linear(j.at("points").get<std::vector<std::array<double, 2>>>());
  throw std::invalid_argument("ConcaveFn::from_json: unknown kind '" + kind + "'");
}

}  // namespace liftcut
