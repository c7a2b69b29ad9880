#pragma once

#include "mht/mary_testing.hpp"
#include "mht/measures.hpp"

// Built-in demo instances for the CLI and the test suites.

namespace mht {

// Ternary channel with a circulant likelihood (rows are shifts of
// 0.40/0.27/0.33) and uniform prior; the classical example for comparing
// spectrum lower bounds.  Its exact MAP error is 0.6.
RandomizedKernel ternary_likelihood();
JointDistribution ternary_example();

// Two independent observations of the ternary channel under the same
// hypothesis: joint over (v, (y1, y2)) with observation index y1*3 + y2.
JointDistribution ternary_two_observation();

// Scores q(v, (y1, y2)) = P(y1|v): decodes from the first observation only.
MetricMatrix first_observation_metric();

} // namespace mht
