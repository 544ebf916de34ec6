#pragma once

#include <vector>

#include "liftcut/concave.hpp"

namespace liftcut {

// Parameters of the generic subadditive step functions. The sequences b
// (b_1, b_2, ...) and v (v_0, v_1, ...) are materialized as finite prefixes
// of equal length M >= m; past the prefix the closure tail b_i = 0,
// v_{i-1} = b_M + v_{M-1} applies, which keeps the defining inequalities
// tight. Derived quantities: a_i = b_i + tau * epsilon, A_i = sum of a,
// B_i = A_{i-1} + b_i, psi_i = g(-b_{i+1} - v_i - eps) - g(-b_{i+1} - v_i).
//
// Validation rejects, with a named diagnostic: negative epsilon, epsilon = 0
// with tau > 1 (the epsilon tiles degenerate), b negative or increasing,
// b_{i+2} + v_{i+1} < b_{i+1} + v_i, or gamma outside [0, tau-1].
struct SubadditiveParams {
  double epsilon;
  int tau;
  std::vector<double> b;  // b[0] = b_1, ...
  std::vector<double> v;  // v[0] = v_0, ...
  int m;
  int gamma;
  ConcaveFn base;         // g for omega/omega_bar; chi/chi_bar reflect it

  SubadditiveParams(double epsilon, int tau, std::vector<double> b, std::vector<double> v, int m,
                    int gamma, ConcaveFn base);

  double b_at(int i) const;    // b_i, i >= 1
  double v_at(int i) const;    // v_i, i >= 0
  double a_at(int i) const { return b_at(i) + tau * epsilon; }
  double psi_at(int i) const;  // psi_i, i >= 0
};

// Piecewise concave subadditive function on R- anchored at the -A_i grid.
// Throws std::runtime_error("insufficient sequence coverage") when the tail
// cannot reach delta (possible only with a stalled a_i = 0 tail).
double omega(const SubadditiveParams& p, double delta);

// omega continued affinely-in-pattern below -B_m - (gamma + 1) eps.
double omega_bar(const SubadditiveParams& p, double delta);

// Reflections on R+ evaluated through h(z) = g(-z); chi(delta) == omega(-delta).
double chi(const SubadditiveParams& p, double delta);
double chi_bar(const SubadditiveParams& p, double delta);

}  // namespace liftcut
