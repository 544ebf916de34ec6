#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "liftcut/cut.hpp"
#include "liftcut/instance.hpp"
#include "liftcut/lift_context.hpp"
#include "liftcut/problems.hpp"

namespace liftcut {

// All integer box points with w = f(a^T x), in odometer order over original
// variables. Throws when the box exceeds 2e6 points.
std::vector<std::pair<double, std::vector<int>>> enumerate_points(const InstanceX& inst);

struct CutViolation {
  std::vector<int> x;
  double amount;
};

// Ok (nullopt) iff rhs(x) >= f(a^T x) - kTol at every box point; otherwise
// the worst violator. Bound cuts check alpha0 + alpha.x >= -kTol instead.
std::optional<CutViolation> check_validity(const Cut& cut, const InstanceX& inst);

// Dimension of the face the cut induces on the hull: affine rank of its
// tight feasible points minus one (bound cuts gain one dimension from the
// free downward ray on w). Facet-defining iff the result equals n.
// Throws if the cut is not valid on the instance.
int face_dimension(const Cut& cut, const InstanceX& inst);

enum class LiftKind { Zeta, Eta, EtaRelaxed, Phi };

// Ground-truth lifting values by enumeration. EtaRelaxed raises the seed
// variable cap to k + ceil(|delta| / a_s) + 1 and asserts that the last two
// levels are non-improving, so the cap is verified rather than assumed.
double lift_bruteforce(const LiftContext& ctx, double delta, LiftKind which);

// Exact optimum of a desk-scale problem by exhaustive search. Throws when
// the search space exceeds 2e7 assignments.
std::pair<double, std::vector<double>> optimum_bruteforce(const Problem& problem);

}  // namespace liftcut
