#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Core data model for finite-alphabet hypothesis testing: weighted measures
// over labeled finite alphabets, joint hypothesis/observation distributions,
// and row-stochastic kernels (binary tests and M-ary decoders).
//
// All values are immutable after construction in practice: every operation in
// this library is a pure function of its inputs, so concurrent use from
// multiple threads is safe.

namespace mht {

// Absolute tolerance for normalization and equality checks.
inline constexpr double kSumTol = 1e-9;

// Relative tolerance for likelihood-ratio ties and argmax tie sets.
inline constexpr double kTieTol = 1e-9;

// Nonnegative weights over a finite alphabet {0, ..., size-1}.  With
// `normalized` set this is a probability distribution; unnormalized measures
// (e.g. the counting measure, weight 1 on every symbol) are first-class.
struct FiniteMeasure {
    std::vector<double> weights;
    bool normalized = true;

    FiniteMeasure() = default;
    FiniteMeasure(std::vector<double> w, bool norm = true)
        : weights(std::move(w)), normalized(norm) {}

    std::size_t size() const { return weights.size(); }
    double operator[](std::size_t i) const { return weights[i]; }
    double total_mass() const;

    static FiniteMeasure uniform(std::size_t n);
    // Counting measure: weight 1 on each of the n symbols, not normalized.
    static FiniteMeasure counting(std::size_t n);
};

// Joint distribution of a hypothesis V in {0..M-1} and an observation Y in
// {0..num_observations-1}, stored dense row-major (rows indexed by v).
// Also used for auxiliary joint measures, with `normalized` cleared.
struct JointDistribution {
    int num_hypotheses = 0;   // M
    int num_observations = 0; // |Y|
    std::vector<double> mass; // M x |Y|, row-major
    bool normalized = true;

    JointDistribution() = default;
    JointDistribution(int m, int y, std::vector<double> p, bool norm = true)
        : num_hypotheses(m), num_observations(y), mass(std::move(p)),
          normalized(norm) {}

    double operator()(int v, int y) const {
        return mass[static_cast<std::size_t>(v) * num_observations + y];
    }
    double& at(int v, int y) {
        return mass[static_cast<std::size_t>(v) * num_observations + y];
    }
    std::size_t size() const { return mass.size(); }

    // Flattened view over the M*|Y| product alphabet, index v*|Y|+y.
    FiniteMeasure flatten() const { return FiniteMeasure(mass, normalized); }
};

// Row-stochastic map from inputs to outputs.  A binary test is the special
// case num_outputs == 2 (column 0 = accept H0); an M-ary decoder has
// num_inputs == |Y| and num_outputs == M.
struct RandomizedKernel {
    int num_inputs = 0;
    int num_outputs = 0;
    std::vector<double> rows; // num_inputs x num_outputs, row-major

    RandomizedKernel() = default;
    RandomizedKernel(int in, int out, std::vector<double> r)
        : num_inputs(in), num_outputs(out), rows(std::move(r)) {}

    double operator()(int input, int output) const {
        return rows[static_cast<std::size_t>(input) * num_outputs + output];
    }
};

// First violated invariant, or ok.  Reporting operation: never throws.
struct ValidationReport {
    bool ok = true;
    std::string message; // empty when ok

    explicit operator bool() const { return ok; }
};

ValidationReport validate(const FiniteMeasure& m);
ValidationReport validate(const JointDistribution& j);
ValidationReport validate(const RandomizedKernel& k);

// Throwing variants used by operations whose precondition is a valid input.
void require_valid(const FiniteMeasure& m, const char* what);
void require_valid(const JointDistribution& j, const char* what);
void require_valid(const RandomizedKernel& k, const char* what);

struct Marginals {
    FiniteMeasure prior;       // P_V(v) = sum_y P_VY(v, y)
    FiniteMeasure observation; // P_Y(y) = sum_v P_VY(v, y)
};

Marginals marginals(const JointDistribution& pvy);

// Product measure (v, y) -> qv(v) * qy(y).  Either factor may be
// unnormalized; the result is flagged normalized only if both factors are.
JointDistribution product(const FiniteMeasure& qv, const FiniteMeasure& qy);

} // namespace mht
