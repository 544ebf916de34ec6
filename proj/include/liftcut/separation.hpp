#pragma once

#include <memory>
#include <optional>
#include <set>

#include "liftcut/cutgen.hpp"
#include "liftcut/instance.hpp"

namespace liftcut {

struct SeparationResult {
  Cut cut;
  double violation;
};

// Finds a violated lifted cut at (wbar, xbar), or nullopt. When every
// component of xbar sits at a bound, or exactly one is integral and
// interior, the seed partition is read off the point and separation is
// exact: a violated cut is returned iff wbar > f(a^T xbar) + kTol (all
// families collapse to the same right-hand side there; the single-phase
// builder is used). Otherwise each interior component is tried as the seed
// variable with k = ceil(xbar_s) and S1 = {i : xbar_i >= mu_i / 2}, every
// requested family is evaluated, and the most violated cut is returned if
// its violation exceeds kViolMin.
std::optional<SeparationResult> separate(double wbar, const std::vector<double>& xbar,
                                         const std::shared_ptr<const InstanceX>& inst,
                                         const std::set<CutFamily>& families, bool prefer_exact);

}  // namespace liftcut
