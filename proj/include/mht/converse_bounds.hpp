#pragma once

#include "mht/binary_testing.hpp"
#include "mht/gamma_sweep.hpp"
#include "mht/mary_testing.hpp"
#include "mht/measures.hpp"

#include <optional>
#include <vector>

// Classical converse bounds on the minimum M-ary error probability, each as
// a standalone evaluator over an auxiliary output measure Q_Y.  All of them
// weaken the exact characterizations in mary_testing; tight_poor_verdu and
// bank_of_tests at Q_Y = qy_star recover the exact error.

namespace mht {

// Verdu-Han bound sup_{gamma} { Pr[P_VY/Q_Y <= gamma] - gamma }.  Q_Y
// defaults to the observation marginal P_Y; equals the exact error at
// Q_Y = qy_star.
GammaSweep verdu_han(const JointDistribution& pvy,
                     const std::optional<FiniteMeasure>& qy = std::nullopt);

// Wolfowitz strong converse: for each candidate gamma the conditional tail
// Pr[P_VY(v,Y)/Q_Y(Y) <= gamma | V = v] is computed per hypothesis and the
// infimum over v is taken.  Requires P_V(v) > 0 for all v.
GammaSweep wolfowitz(const JointDistribution& pvy, const FiniteMeasure& qy);

// Poor-Verdu bound (1 - gamma) Pr[P_VY/Q_Y <= gamma] at one gamma, plus its
// side condition sum_{v,y} P_VY 1{ratio > gamma} <= sum_{v,y} Q_Y 1{ratio >
// gamma}.  The condition holds for every gamma when Q_Y = P_Y or qy_star,
// but not for arbitrary pairs; the value is returned either way.
ConditionedBound poor_verdu(const JointDistribution& pvy,
                            const FiniteMeasure& qy, double gamma);

// Sweep of (1 - gamma) Pr[ratio <= gamma] at Q_Y = qy_star; its best value
// is exactly the minimum error probability.
GammaSweep tight_poor_verdu(const JointDistribution& pvy);

struct BankOfTests {
    double value = 0;
    std::vector<double> budgets; // per-v type-1 budgets Q_Vhat(v)
};

// Bank of M binary tests P_{Y|V=v} against Q_Y with per-test budgets
// Q_Vhat(v) = sum_y Q_Y(y) P_MAP(v|y): value = sum_v P_V(v) alpha_{Q_Vhat(v)}
// (P_{Y|V=v}, Q_Y) <= exact error, with equality at Q_Y = qy_star.
BankOfTests bank_of_tests(const JointDistribution& pvy,
                          const FiniteMeasure& qy);

} // namespace mht
