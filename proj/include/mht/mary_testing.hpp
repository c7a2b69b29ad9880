#pragma once

#include "mht/binary_testing.hpp"
#include "mht/gamma_sweep.hpp"
#include "mht/measures.hpp"

#include <vector>

// M-ary Bayesian hypothesis testing: MAP decoding and the exact
// characterizations of its error probability as an induced binary test
// (metaconverse_alpha) and as an information-spectrum supremum
// (spectrum_supremum), together with their decoder-specific forms.

namespace mht {

// Exact minimum error probability and the objects realizing it.
//
// The MAP decoder induces a binary test over (v, y) that attains the same
// (alpha, beta) as the Neyman-Pearson acceptance profile returned by
// alpha_beta against uniform_V x qy_star, but the two tests may differ on
// observations where the MAP argmax ties; neither is canonical.
struct MapSolution {
    double error = 0; // 1 - sum_y max_v P_VY(v, y)
    double mu = 0;    // sum_y max_v P_VY(v, y) = 1 - error
    FiniteMeasure qy_star;   // qy_star(y) = max_v P_VY(v, y) / mu
    RandomizedKernel decoder; // MAP with uniform tie split, |Y| -> M
    std::vector<std::vector<int>> tie_sets; // argmax hypothesis sets S(y)
};

MapSolution map_solve(const JointDistribution& pvy);

// Error probability 1 - sum_{v,y} P_VY(v,y) decoder(v|y) of an arbitrary
// (possibly randomized) decoder.
double decoder_error(const JointDistribution& pvy,
                     const RandomizedKernel& decoder);

// alpha_{1/M}(P_VY, Q_V x Q_Y) with uniform Q_V over the flattened M*|Y|
// alphabet.  A lower bound on the minimum error for every Q_Y; equals it at
// Q_Y = qy_star.
double metaconverse_alpha(const JointDistribution& pvy,
                          const FiniteMeasure& qy);

struct SpectrumValue {
    double value = 0;
    double gamma = 0; // maximizing threshold (smallest on ties)
};

// sup_{gamma >= 0} { Pr[P_VY(V,Y)/Q_Y(Y) <= gamma] - gamma }, exact over
// jump points.  Lower-bounds the minimum error for every Q_Y; equals it at
// Q_Y = qy_star, where the maximizing gamma is mu.
SpectrumValue spectrum_supremum(const JointDistribution& pvy,
                                const FiniteMeasure& qy);

// Type-1 weight sum_{v,y} Q_VY(v,y) decoder(v|y) of the binary test induced
// by a decoder, evaluated under an auxiliary joint measure.
double decoder_type1(const JointDistribution& qvy,
                     const RandomizedKernel& decoder);

struct DecoderAlphaBound {
    double alpha = 0;
    double eps1 = 0; // the type-1 budget used
};

// alpha_{eps1}(P_VY, Q_VY) with eps1 = decoder_type1(Q_VY, decoder).  Lower
// bound on decoder_error for every probability Q_VY; tight at Q_VY = P_VY.
DecoderAlphaBound decoder_alpha_bound(const JointDistribution& pvy,
                                      const JointDistribution& qvy,
                                      const RandomizedKernel& decoder);

// sup_{gamma >= 0} { Pr[P_VY/Q_VY <= gamma] - gamma * eps1 }; tight at
// Q_VY = P_VY with gamma = 1.
SpectrumValue decoder_spectrum_bound(const JointDistribution& pvy,
                                     const JointDistribution& qvy,
                                     const RandomizedKernel& decoder);

// Arbitrary decoding scores q(v, y); rows indexed by v.
struct MetricMatrix {
    int num_hypotheses = 0;
    int num_observations = 0;
    std::vector<double> values;

    double operator()(int v, int y) const {
        return values[static_cast<std::size_t>(v) * num_observations + y];
    }
};

// Maximum-metric decoder: uniform over the argmax set of q(., y).
RandomizedKernel max_metric_decoder(const MetricMatrix& q);

struct MetricAuxiliary {
    JointDistribution qvy;
    double mu_prime = 0;
};

// Auxiliary joint Q(v,y) = P_VY(v,y) max_v' q(v',y) / (q(v,y) mu') at which
// decoder_alpha_bound becomes an equality for the maximum-metric decoder.
// Requires q > 0 on the support of P_VY; entries with P_VY = 0 contribute 0.
MetricAuxiliary max_metric_auxiliary(const JointDistribution& pvy,
                                     const MetricMatrix& q);

// Exact minimum error computed as alpha_1(P_VY, counting_V x qy_star): the
// uniform prior factor 1/M is replaced by the counting measure over V and
// the budget rises to 1.  Works unchanged for any finite M.
double counting_measure_error(const JointDistribution& pvy);

// Grouped ratios P_VY(v,y)/Q_Y(y) weighted by P_VY (p side) and Q_Y (q side,
// counted once per hypothesis).  Shared by the spectrum forms and the
// classical bound sweeps.
RatioProfile joint_ratio_profile(const JointDistribution& pvy,
                                 const FiniteMeasure& qy);

} // namespace mht
