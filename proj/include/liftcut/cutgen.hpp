#pragma once

#include <utility>
#include <vector>

#include "liftcut/cut.hpp"
#include "liftcut/lift_context.hpp"
#include "liftcut/lifting.hpp"

namespace liftcut {

enum class CutFamily { Single, TwoI, TwoII };

// w <= sum_{S0} Z(a_i) x_i + sum_{S1} Z(-a_i)(mu_i - x_i) + rho (x_s - k) + g(k a_s),
// flattened to Cut form over original variables.
Cut single_phase_cut(const LiftContext& ctx);

// First phase over S0 with the exact function, second phase over S1 with the
// exact value where available (prefer_exact) or its upper approximation.
// Metadata records which was used.
Cut two_phase_cut_I(const LiftContext& ctx, bool prefer_exact);

// Reversed lifting order: exact values on S1, exact-or-upper on S0.
Cut two_phase_cut_II(const LiftContext& ctx, bool prefer_exact);

// Substitutes x_i -> mu_i - y_i: alpha0' = alpha0 + sum alpha_i mu_i,
// alpha_i' = -alpha_i. An involution.
Cut complement_transform(const Cut& cut, const std::vector<int>& mu);

// Maps a cut for the single-knapsack form (a = a1 - a2, b = b1 - b2) back to
// the two-row set via v = w - a2^T x + b2. Bound cuts pass through unchanged.
Cut tworow_transform(const Cut& cut_for_xk, const std::vector<double>& a2, double b2);

// Knapsack specialization (f = min{0, b - z}) of the single-phase cut in its
// published closed form. Requires theta = b - sum_{S1} a_i mu_i > 0,
// a_s mu_s > theta, theta / a_s not integral (1e-9), and ctx.k == ceil(theta / a_s).
Cut mir_closed_form(const LiftContext& ctx);

// Knapsack closed forms of the two lifted families: first = pack-style
// (order I), second = cover-style (order II). Same preconditions as
// mir_closed_form. Evaluated through the reduced piecewise-linear lifting
// values, independent of g.
std::pair<Cut, Cut> knapsack_pack_cover_cuts(const LiftContext& ctx);

// Binary (mu = 1) closed forms of the three families; must coincide with the
// generic builders (prefer_exact for the two-phase ones) on binary contexts.
Cut submodular_cut_closed_form(const LiftContext& ctx, CutFamily family);

}  // namespace liftcut
