#pragma once

#include "mht/measures.hpp"

#include <vector>

// Fixed-length lossy compression: excess-distortion probability of a
// codebook under a minimum-distortion encoder, its exact hypothesis-testing
// characterization, and the codebook-free relaxation.

namespace mht {

// Distortion matrix d(v, w) over source x reconstruction alphabets, with the
// maximum allowed distortion D.
struct DistortionSpec {
    int source_size = 0;
    int reconstruction_size = 0;
    std::vector<double> d; // source_size x reconstruction_size, row-major
    double threshold = 0;  // D

    double operator()(int v, int w) const {
        return d[static_cast<std::size_t>(v) * reconstruction_size + w];
    }
};

// Distinct reconstruction symbols w_1..w_M.
struct LossyCode {
    std::vector<int> codewords;

    int size() const { return static_cast<int>(codewords.size()); }
};

// Pr[d(V, C) > D]: mass of source symbols no codeword covers within D.
double excess_distortion(const FiniteMeasure& pv, const DistortionSpec& spec,
                         const LossyCode& code);

// Q-mass of the D-covered source symbols, the type-1 weight of the test
// accepting exactly when the encoder meets the distortion target.
double lsc_test_budget(const FiniteMeasure& qv, const DistortionSpec& spec,
                       const LossyCode& code);

// Excess distortion recomputed through its binary-test characterization:
// alpha at budget 0 against the auxiliary measure uniform on the uncovered
// symbols.  Requires P_V(v) < 1 for all v; returns 0 when every symbol is
// covered.
double excess_distortion_test_form(const FiniteMeasure& pv,
                                   const DistortionSpec& spec,
                                   const LossyCode& code);

// Codebook-free lower bound alpha_{M max_w Q[d(V,w) <= D]}(P_V, Q_V), valid
// for every codebook of the given size.
double kostina_relaxation(const FiniteMeasure& pv, const DistortionSpec& spec,
                          int num_codewords, const FiniteMeasure& qv);

} // namespace mht
