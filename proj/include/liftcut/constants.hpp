#pragma once

namespace liftcut {

// Single numeric regime for the whole library. All inequality checks use
// kTol unless a routine documents a different tolerance next to its use.
inline constexpr double kTol = 1e-9;

// Snap window for assigning a breakpoint-adjacent argument to the branch
// whose closed end contains it. The piecewise functions are continuous, so
// this only affects branch metadata, never values.
inline constexpr double kBranchSnap = 1e-12;

// Cut coefficients below this magnitude are emitted as exact zeros.
inline constexpr double kCoefSnap = 1e-11;

// Minimum violation for a separated cut to be worth adding to an LP.
inline constexpr double kViolMin = 1e-6;

// Tight-point test in face dimension computations: |rhs - w| <= kFaceTol * max(1, |w|).
inline constexpr double kFaceTol = 1e-7;

// Pivot threshold for affine-rank elimination.
inline constexpr double kRankPivotTol = 1e-8;

// Branch-and-cut integrality tolerance and absolute optimality gap.
inline constexpr double kIntTol = 1e-6;
inline constexpr double kAbsGap = 1e-7;

}  // namespace liftcut
