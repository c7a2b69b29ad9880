#pragma once

#include "mht/measures.hpp"
#include "mht/ratio_profile.hpp"

#include <vector>

// Binary hypothesis testing between a distribution P (hypothesis 0) and a
// measure Q (hypothesis 1): exact Neyman-Pearson trade-off and the two
// threshold relaxations that every spectrum bound in this library rests on.

namespace mht {

// A Neyman-Pearson-optimal test for a type-1 budget beta.
//
//   acceptance[y] = 1   where P(y)/Q(y) > gamma,
//                 = p   where the ratio ties with gamma,
//                 = 0   where it is below,
//
// with alpha = sum_y P(y) (1 - acceptance[y]) and
// beta = sum_y Q(y) acceptance[y] the achieved errors.
struct NPSolution {
    double gamma = 0;
    double p = 0;
    double alpha = 0;
    double beta = 0;
    std::vector<double> acceptance; // T(0|y) per symbol
};

// Type-0 error sum_y P(y) (1 - T(0|y)) of the test given by its acceptance
// probabilities T(0|y).
double type0_error(const FiniteMeasure& p, const std::vector<double>& acceptance);

// Type-1 error sum_y Q(y) T(0|y).  Q may be unnormalized, in which case the
// result is a measure and may exceed 1.
double type1_error(const FiniteMeasure& q, const std::vector<double>& acceptance);

// Smallest average error prior0 * e0 + (1 - prior0) * e1 over all tests,
// i.e. sum_y min(prior0 * P(y), (1 - prior0) * Q(y)).
double bayes_binary_error(const FiniteMeasure& p, const FiniteMeasure& q,
                          double prior0);

// Smallest type-0 error among tests with type-1 error at most beta.
//
// Symbols are grouped by likelihood ratio P(y)/Q(y) and accepted in
// decreasing ratio order while Q mass accumulates.  Symbols with Q(y) = 0,
// P(y) > 0 sit above every finite ratio and are accepted at zero cost;
// symbols with P(y) = Q(y) = 0 are irrelevant.  The first group that would
// overshoot beta is accepted with probability p = (beta - accumulated) / its
// Q mass.  When beta lands on a group boundary (within 1e-9) the last fully
// included group reports gamma with p = 1.  If beta >= total Q mass,
// everything is accepted and alpha = 0.
NPSolution alpha_beta(const FiniteMeasure& p, const FiniteMeasure& q,
                      double beta);

// Threshold lower bound Pr_P[P/Q <= gamma'] - gamma' * beta on the optimal
// alpha at budget beta.  Valid for every gamma' >= 0.
double relaxation_bound(const FiniteMeasure& p, const FiniteMeasure& q,
                        double beta, double gamma_prime);

struct ConditionedBound {
    double value = 0;
    bool condition_ok = false;
};

// Scaled-tail lower bound (1 - gamma' * beta) * Pr_P[P/Q <= gamma'].  Sound
// only under the side condition beta * Pr_P[P/Q > gamma'] <= Q[P/Q > gamma']
// (the cross-multiplied form, robust when both tails vanish); the flag
// reports whether it holds, the value is returned either way.
ConditionedBound poor_verdu_lemma_bound(const FiniteMeasure& p,
                                        const FiniteMeasure& q, double beta,
                                        double gamma_prime);

// Ratio profile of P against Q over their common alphabet.
RatioProfile likelihood_ratio_profile(const FiniteMeasure& p,
                                      const FiniteMeasure& q);

// NP solution computed directly from a prebuilt profile (alpha_beta on the
// measures that produced it).
NPSolution alpha_beta_from_profile(const RatioProfile& profile,
                                   std::size_t alphabet_size, double beta);

} // namespace mht
