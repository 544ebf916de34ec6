#pragma once

#include <optional>

#include "liftcut/lift_context.hpp"

namespace liftcut {

// Floor of delta / a with a one-sided snap so that an argument within
// representation error of a breakpoint lands in the branch whose closed end
// contains it. The piecewise functions are continuous, so this is
// value-safe; it only pins the branch choice deterministically.
double snapped_floor_div(double delta, double a);

// Exact first-phase lifting value: the gain of re-optimizing the seed
// inequality after perturbing the argument of g by delta. Total on R,
// continuous, zero at zero.
double zeta(const LiftContext& ctx, double delta);

// Subadditive majorant of zeta obtained by dropping the box on x_s; equals
// zeta on [(k - mu_s - 1) a_s, k a_s].
double z_approx(const LiftContext& ctx, double delta);

// Optimal count of the seed variable given a fixed large-subset load
// a_lambda and shift delta <= 0; maximizes the restricted objective over
// [0, mu_s].
int gamma_opt(const LiftContext& ctx, double a_lambda, double delta);

// Optimal prefix length over the unit expansion of the large S0 subset for
// the restricted second-phase problem at delta <= 0 (unit count, in [0, units]).
int opt_prefix(const LiftContext& ctx, double delta);

// Closed-form lower bound for the second-phase lifting function on R-.
// Exact when S0 equals its large subset. Subadditive on R-.
double eta_lower(const LiftContext& ctx, double delta);

// Closed-form upper bound on R- from the relaxation without the seed
// variable's upper bound. Subadditive on R-; equals eta_lower on
// [(k - mu_s - 1) a_s - A_last, 0].
double eta_upper(const LiftContext& ctx, double delta);

// Exact second-phase lifting value where a closed form is known: S0 equal
// to its large subset, or k == 1 (re-anchored at the smallest weight in
// S0 + s). Otherwise std::nullopt.
std::optional<double> eta_exact(const LiftContext& ctx, double delta);

// Upper bound for the reversed-order second-phase lifting function on R+;
// equals eta_upper of the complemented context at -delta.
double phi_upper(const LiftContext& ctx, double delta);

// Exact reversed-order value where known: S1 equal to its large subset, or
// k == mu_s (evaluated over S1 + s re-sorted). Otherwise std::nullopt.
std::optional<double> phi_exact(const LiftContext& ctx, double delta);

}  // namespace liftcut
