#pragma once

#include <vector>

#include "liftcut/cut.hpp"
#include "liftcut/instance.hpp"

namespace liftcut {

// Secant inequality through x = k-1 and x = k:
//   w <= [g(ka) - g((k-1)a)] (x - k) + g(ka),  k in [mu].
// Throws std::invalid_argument for k outside [1, mu].
Cut seed_inequality(const Instance1D& inst, int k);

// Full linear description of the one-variable hull: the mu secant cuts for
// k = 1..mu (in increasing k; duplicates kept when g is affine across
// consecutive integers) followed by the two box facets 0 <= x <= mu.
std::vector<Cut> hull_1d(const Instance1D& inst);

}  // namespace liftcut
