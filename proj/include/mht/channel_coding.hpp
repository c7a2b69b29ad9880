#pragma once

#include "mht/measures.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Channel coding as an M-ary testing instance: a codebook over a discrete
// memoryless channel induces a joint distribution whose minimum error is the
// maximum-likelihood decoding error, bounded below by the metaconverse.

namespace mht {

// Discrete memoryless channel, transition row-stochastic W(y|x).
struct DMC {
    int input_size = 0;
    int output_size = 0;
    std::vector<double> transition; // input_size x output_size, row-major

    double operator()(int x, int y) const {
        return transition[static_cast<std::size_t>(x) * output_size + y];
    }
};

// Ordered list of distinct channel inputs; for product channels over
// {0,1}^n the inputs are n-bit integers.
struct ChannelCode {
    int blocklength = 1;
    std::vector<int> codewords;

    int size() const { return static_cast<int>(codewords.size()); }
};

// Thrown when an enumeration or materialization guard is exceeded (CLI exit
// code 2).
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// n-fold product of a binary symmetric channel with crossover delta:
// W(y|x) = delta^d (1-delta)^(n-d) with d the Hamming distance.
DMC bsc(int n, double delta);

// Joint distribution of (message, channel output) for equiprobable messages:
// P_VY(v, y) = W(y | codeword v) / M.  Its map_solve error is the code's
// maximum-likelihood error probability.
JointDistribution code_to_joint(const DMC& w, const ChannelCode& code);

// Metaconverse value alpha_{1/M}(P_X W, P_X Q_Y) for the code-induced input
// distribution; equals the code's ML error at Q_Y = qy_star of its joint.
double metaconverse(const DMC& w, const ChannelCode& code,
                    const FiniteMeasure& qy);

// Codebook-free weakening: alpha_{1/M}(P_X x W, P_X x Q_Y) for a given input
// distribution over the whole channel input alphabet.  No min-max search is
// performed; for the BSC the saddlepoint is uniform/uniform.
double codebook_free_bound(const DMC& w, int num_messages,
                           const FiniteMeasure& px, const FiniteMeasure& qy);

struct CodeSearchOptions {
    // Fix the first codeword to the all-zero word.  Valid for channels whose
    // transition law is invariant under translation of inputs and outputs by
    // a common word (the BSC product channel); cuts the space by |X|.
    bool fix_first_zero = true;
    int workers = 1;
    std::uint64_t max_candidates = 10'000'000;
};

struct CodeSearchResult {
    ChannelCode code;
    double error = 0;
};

// Exhaustive search over unordered sets of M distinct codewords for the code
// minimizing the ML error; ties broken by lexicographically smallest
// codeword list.  The reduction is associative, so the result does not
// depend on how the space is partitioned across workers.
CodeSearchResult best_code_search(const DMC& w, int n, int num_messages,
                                  const CodeSearchOptions& opts = {});

// Codeword rendered as an n-bit binary string, most significant bit first.
std::string codeword_bits(int word, int blocklength);

} // namespace mht
