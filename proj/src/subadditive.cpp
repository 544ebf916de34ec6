#include "liftcut/subadditive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "liftcut/constants.hpp"

namespace liftcut {

namespace {

double snap_scale(double v) { return kBranchSnap * std::max(1.0, std::fabs(v)); }

constexpr int kMaxSegments = 1000000;

}  // namespace

SubadditiveParams::SubadditiveParams(double epsilon_, int tau_, std::vector<double> b_,
                                     std::vector<double> v_, int m_, int gamma_, ConcaveFn base_)
    : epsilon(epsilon_), tau(tau_), b(std::move(b_)), v(std::move(v_)), m(m_), gamma(gamma_),
      base(std::move(base_)) {
  if (epsilon < 0.0) throw std::invalid_argument("SubadditiveParams: epsilon must be >= 0");
  if (tau < 1) throw std::invalid_argument("SubadditiveParams: tau must be a positive integer");
  if (epsilon == 0.0 && tau != 1)
    throw std::invalid_argument("SubadditiveParams: epsilon = 0 requires tau = 1");
  if (m < 1) throw std::invalid_argument("SubadditiveParams: m must be a positive integer");
  if (gamma < 0 || gamma > tau - 1)
    throw std::invalid_argument("SubadditiveParams: gamma must lie in [0, tau - 1]");
  if (b.size() != v.size())
    throw std::invalid_argument("SubadditiveParams: b and v prefixes must have equal length");
  if (static_cast<int>(b.size()) < m)
    throw std::invalid_argument("SubadditiveParams: prefix must materialize at least m terms");
  for (size_t i = 0; i < b.size(); ++i) {
    if (b[i] < -kTol)
      throw std::invalid_argument("SubadditiveParams: b_" + std::to_string(i + 1) +
                                  " is negative");
    if (i + 1 < b.size() && b[i + 1] > b[i] + kTol)
      throw std::invalid_argument("SubadditiveParams: b must be non-increasing (violated at b_" +
                                  std::to_string(i + 2) + ")");
  }
  for (size_t i = 0; i + 1 < v.size(); ++i) {
    // b_{i+2} + v_{i+1} >= b_{i+1} + v_i over the materialized prefix
    if (b_at(static_cast<int>(i) + 2) + v[i + 1] < b_at(static_cast<int>(i) + 1) + v[i] - kTol)
      throw std::invalid_argument(
          "SubadditiveParams: b_{i+2} + v_{i+1} >= b_{i+1} + v_i violated at i = " +
          std::to_string(i));
  }
}

double SubadditiveParams::b_at(int i) const {
  if (i < 1) throw std::invalid_argument("SubadditiveParams: b index must be >= 1");
  if (i <= static_cast<int>(b.size())) return b[i - 1];
  return 0.0;
}

double SubadditiveParams::v_at(int i) const {
  if (i < 0) throw std::invalid_argument("SubadditiveParams: v index must be >= 0");
  if (i < static_cast<int>(v.size())) return v[i];
  return b.back() + v.back();
}

double SubadditiveParams::psi_at(int i) const {
  double arg = -b_at(i + 1) - v_at(i);
  return base(arg - epsilon) - base(arg);
}

double omega(const SubadditiveParams& p, double delta) {
  if (delta > snap_scale(delta)) throw std::invalid_argument("omega: delta must be <= 0");
  delta = std::min(delta, 0.0);
  const ConcaveFn& g = p.base;

  double a_prefix = 0.0;   // A_i
  double omega_a = 0.0;    // omega(-A_i)
  for (int i = 0; i < kMaxSegments; ++i) {
    double bi1 = p.b_at(i + 1);
    double vi = p.v_at(i);
    double big_b = a_prefix + bi1;  // B_{i+1}
    if (delta >= -big_b - snap_scale(big_b)) {
      return g(delta + a_prefix - vi) + omega_a - g(-vi);
    }
    double a_next = a_prefix + p.a_at(i + 1);  // A_{i+1}
    double psi = p.psi_at(i);
    if (delta >= -a_next - snap_scale(a_next)) {
      // tile [-B_{i+1} - (l+1) eps, -B_{i+1} - l eps)
      double u = (-delta - big_b) / p.epsilon;
      double ell = std::ceil(u - snap_scale(u)) - 1.0;
      ell = std::clamp(ell, 0.0, static_cast<double>(p.tau - 1));
      return g(delta + a_prefix + ell * p.epsilon - vi) + omega_a + ell * psi - g(-vi);
    }
    if (a_next <= a_prefix + kBranchSnap)
      throw std::runtime_error("insufficient sequence coverage");
    omega_a += p.tau * psi + (g(-bi1 - vi) - g(-vi));
    a_prefix = a_next;
  }
  throw std::runtime_error("insufficient sequence coverage");
}

double omega_bar(const SubadditiveParams& p, double delta) {
  if (delta > snap_scale(delta)) throw std::invalid_argument("omega_bar: delta must be <= 0");
  delta = std::min(delta, 0.0);
  double a_m1 = 0.0;  // A_{m-1}
  for (int i = 1; i <= p.m - 1; ++i) a_m1 += p.a_at(i);
  double threshold = a_m1 + p.b_at(p.m) + (p.gamma + 1) * p.epsilon;  // B_m + (gamma+1) eps
  if (delta >= -threshold - snap_scale(threshold)) return omega(p, delta);
  double vm1 = p.v_at(p.m - 1);
  return p.base(delta + a_m1 + p.gamma * p.epsilon - vm1) + omega(p, -a_m1) +
         p.gamma * p.psi_at(p.m - 1) - p.base(-vm1);
}

double chi(const SubadditiveParams& p, double delta) {
  if (delta < -snap_scale(delta)) throw std::invalid_argument("chi: delta must be >= 0");
  delta = std::max(delta, 0.0);
  auto h = [&](double z) { return p.base(-z); };

  double a_prefix = 0.0;  // A_i
  double chi_a = 0.0;     // chi(A_i)
  for (int i = 0; i < kMaxSegments; ++i) {
    double bi1 = p.b_at(i + 1);
    double vi = p.v_at(i);
    double big_b = a_prefix + bi1;  // B_{i+1}
    if (delta <= big_b + snap_scale(big_b)) {
      return h(delta - a_prefix + vi) + chi_a - h(vi);
    }
    double a_next = a_prefix + p.a_at(i + 1);
    double psi = p.psi_at(i);
    if (delta <= a_next + snap_scale(a_next)) {
      // tile (B_{i+1} + l eps, B_{i+1} + (l+1) eps]
      double u = (delta - big_b) / p.epsilon;
      double ell = std::ceil(u - snap_scale(u)) - 1.0;
      ell = std::clamp(ell, 0.0, static_cast<double>(p.tau - 1));
      return h(delta - a_prefix - ell * p.epsilon + vi) + chi_a + ell * psi - h(vi);
    }
    if (a_next <= a_prefix + kBranchSnap)
      throw std::runtime_error("insufficient sequence coverage");
    chi_a += p.tau * psi + (h(bi1 + vi) - h(vi));
    a_prefix = a_next;
  }
  throw std::runtime_error("insufficient sequence coverage");
}

double chi_bar(const SubadditiveParams& p, double delta) {
  if (delta < -snap_scale(delta)) throw std::invalid_argument("chi_bar: delta must be >= 0");
  delta = std::max(delta, 0.0);
  auto h = [&](double z) { return p.base(-z); };
  double a_m1 = 0.0;
  for (int i = 1; i <= p.m - 1; ++i) a_m1 += p.a_at(i);
  double threshold = a_m1 + p.b_at(p.m) + (p.gamma + 1) * p.epsilon;
  if (delta <= threshold + snap_scale(threshold)) return chi(p, delta);
  double vm1 = p.v_at(p.m - 1);
  return h(delta - a_m1 - p.gamma * p.epsilon + vm1) + chi(p, a_m1) +
         p.gamma * p.psi_at(p.m - 1) - h(vm1);
}

}  // namespace liftcut
