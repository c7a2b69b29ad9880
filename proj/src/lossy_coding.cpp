#include "mht/lossy_coding.hpp"

#include "mht/binary_testing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mht {

namespace {

void check_spec(const DistortionSpec& spec) {
    if (spec.source_size < 1 || spec.reconstruction_size < 1)
        throw std::invalid_argument("distortion spec: sizes must be positive");
    if (spec.d.size() != static_cast<std::size_t>(spec.source_size) *
                             spec.reconstruction_size)
        throw std::invalid_argument("distortion spec: matrix shape mismatch");
    for (double x : spec.d)
        if (!(x >= 0.0) || std::isinf(x))
            throw std::invalid_argument(
                "distortion spec: entries must be finite and nonnegative");
    if (spec.threshold < 0.0)
        throw std::invalid_argument("distortion spec: D must be nonnegative");
}

void check_code(const DistortionSpec& spec, const LossyCode& code) {
    if (code.codewords.empty())
        throw std::invalid_argument("lossy code: empty codebook");
    std::vector<int> sorted = code.codewords;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= spec.reconstruction_size)
            throw std::invalid_argument(
                "lossy code: codeword outside reconstruction alphabet");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("lossy code: codewords must be distinct");
    }
}

// d(v, C) <= D under the minimum-distortion encoder.
bool covered(const DistortionSpec& spec, const LossyCode& code, int v) {
    for (int w : code.codewords)
        if (spec(v, w) <= spec.threshold)
            return true;
    return false;
}

} // namespace

double excess_distortion(const FiniteMeasure& pv, const DistortionSpec& spec,
                         const LossyCode& code) {
    require_valid(pv, "excess_distortion: P_V");
    check_spec(spec);
    check_code(spec, code);
    if (pv.size() != static_cast<std::size_t>(spec.source_size))
        throw std::invalid_argument("excess_distortion: source size mismatch");
    double eps = 0.0;
    for (int v = 0; v < spec.source_size; ++v)
        if (!covered(spec, code, v))
            eps += pv[static_cast<std::size_t>(v)];
    return eps;
}

double lsc_test_budget(const FiniteMeasure& qv, const DistortionSpec& spec,
                       const LossyCode& code) {
    check_spec(spec);
    check_code(spec, code);
    if (qv.size() != static_cast<std::size_t>(spec.source_size))
        throw std::invalid_argument("lsc_test_budget: source size mismatch");
    double budget = 0.0;
    for (int v = 0; v < spec.source_size; ++v)
        if (covered(spec, code, v))
            budget += qv[static_cast<std::size_t>(v)];
    return budget;
}

double excess_distortion_test_form(const FiniteMeasure& pv,
                                   const DistortionSpec& spec,
                                   const LossyCode& code) {
    require_valid(pv, "excess_distortion_test_form: P_V");
    check_spec(spec);
    check_code(spec, code);
    if (pv.size() != static_cast<std::size_t>(spec.source_size))
        throw std::invalid_argument(
            "excess_distortion_test_form: source size mismatch");
    for (std::size_t v = 0; v < pv.size(); ++v)
        if (pv[v] >= 1.0)
            throw std::domain_error(
                "excess_distortion_test_form: requires P_V(v) < 1 for all v");

    // Auxiliary measure uniform on the uncovered symbols.
    std::vector<double> qc(pv.size(), 0.0);
    int uncovered = 0;
    for (int v = 0; v < spec.source_size; ++v)
        if (!covered(spec, code, v)) {
            qc[static_cast<std::size_t>(v)] = 1.0;
            ++uncovered;
        }
    if (uncovered == 0)
        return 0.0;
    for (double& x : qc)
        x /= static_cast<double>(uncovered);

    FiniteMeasure q(std::move(qc));
    double budget = lsc_test_budget(q, spec, code); // 0 by construction
    return alpha_beta(pv, q, budget).alpha;
}

double kostina_relaxation(const FiniteMeasure& pv, const DistortionSpec& spec,
                          int num_codewords, const FiniteMeasure& qv) {
    require_valid(pv, "kostina_relaxation: P_V");
    require_valid(qv, "kostina_relaxation: Q_V");
    check_spec(spec);
    if (num_codewords < 1)
        throw std::invalid_argument("kostina_relaxation: M must be positive");
    if (pv.size() != static_cast<std::size_t>(spec.source_size) ||
        qv.size() != static_cast<std::size_t>(spec.source_size))
        throw std::invalid_argument("kostina_relaxation: source size mismatch");

    double best_cover = 0.0;
    for (int w = 0; w < spec.reconstruction_size; ++w) {
        double cover = 0.0;
        for (int v = 0; v < spec.source_size; ++v)
            if (spec(v, w) <= spec.threshold)
                cover += qv[static_cast<std::size_t>(v)];
        best_cover = std::max(best_cover, cover);
    }
    double budget = static_cast<double>(num_codewords) * best_cover;
    return alpha_beta(pv, qv, budget).alpha;
}

} // namespace mht
