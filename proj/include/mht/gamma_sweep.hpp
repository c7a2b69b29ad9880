#pragma once

#include "mht/ratio_profile.hpp"

#include <vector>

namespace mht {

// Exact threshold sweep: the objective is evaluated at gamma = 0 and at
// every distinct ratio value (the jump points).  Between jumps the tail
// probability is constant and the objective strictly decreases in gamma, so
// the supremum over gamma >= 0 is attained at one of these points.  No
// gridding: grids lose the exact optimum.
struct GammaSweep {
    std::vector<double> gammas; // 0 plus ascending distinct jump points
    std::vector<double> values;
    double best_gamma = 0;
    double best_value = 0; // max over values; smallest gamma on ties
};

// Objective Pr[ratio <= gamma] - slope * gamma.
GammaSweep linear_tail_sweep(const RatioProfile& profile, double slope);

// Objective (1 - gamma) * Pr[ratio <= gamma].
GammaSweep scaled_tail_sweep(const RatioProfile& profile);

} // namespace mht
