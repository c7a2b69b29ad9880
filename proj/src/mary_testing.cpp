#include "mht/mary_testing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mht {

namespace {

void check_decoder_shape(const JointDistribution& pvy,
                         const RandomizedKernel& decoder, const char* what) {
    if (decoder.num_inputs != pvy.num_observations ||
        decoder.num_outputs != pvy.num_hypotheses)
        throw std::invalid_argument(
            std::string(what) + ": decoder shape mismatch");
}

} // namespace

MapSolution map_solve(const JointDistribution& pvy) {
    require_valid(pvy, "map_solve");
    const int m = pvy.num_hypotheses;
    const int ny = pvy.num_observations;

    MapSolution sol;
    sol.qy_star.weights.assign(ny, 0.0);
    sol.decoder = RandomizedKernel(
        ny, m, std::vector<double>(static_cast<std::size_t>(ny) * m, 0.0));
    sol.tie_sets.resize(ny);

    double mu = 0.0;
    for (int y = 0; y < ny; ++y) {
        double colmax = 0.0;
        for (int v = 0; v < m; ++v)
            colmax = std::max(colmax, pvy(v, y));
        double tol = kTieTol * std::max(1.0, colmax);
        for (int v = 0; v < m; ++v)
            if (pvy(v, y) >= colmax - tol)
                sol.tie_sets[y].push_back(v);
        double share = 1.0 / static_cast<double>(sol.tie_sets[y].size());
        for (int v : sol.tie_sets[y])
            sol.decoder.rows[static_cast<std::size_t>(y) * m + v] = share;
        sol.qy_star.weights[y] = colmax;
        mu += colmax;
    }
    sol.mu = mu;
    sol.error = 1.0 - mu;
    for (double& w : sol.qy_star.weights)
        w /= mu;
    sol.qy_star.normalized = true;
    return sol;
}

double decoder_error(const JointDistribution& pvy,
                     const RandomizedKernel& decoder) {
    require_valid(pvy, "decoder_error");
    require_valid(decoder, "decoder_error");
    check_decoder_shape(pvy, decoder, "decoder_error");
    double correct = 0.0;
    for (int v = 0; v < pvy.num_hypotheses; ++v)
        for (int y = 0; y < pvy.num_observations; ++y)
            correct += pvy(v, y) * decoder(y, v);
    return 1.0 - correct;
}

double metaconverse_alpha(const JointDistribution& pvy,
                          const FiniteMeasure& qy) {
    require_valid(pvy, "metaconverse_alpha");
    if (qy.size() != static_cast<std::size_t>(pvy.num_observations))
        throw std::invalid_argument("metaconverse_alpha: Q_Y size mismatch");
    const double m = static_cast<double>(pvy.num_hypotheses);
    JointDistribution aux =
        product(FiniteMeasure::uniform(pvy.num_hypotheses), qy);
    return alpha_beta(pvy.flatten(), aux.flatten(), 1.0 / m).alpha;
}

RatioProfile joint_ratio_profile(const JointDistribution& pvy,
                                 const FiniteMeasure& qy) {
    require_valid(qy, "joint_ratio_profile: Q_Y");
    if (qy.size() != static_cast<std::size_t>(pvy.num_observations))
        throw std::invalid_argument("joint_ratio_profile: Q_Y size mismatch");
    std::vector<RatioEntry> entries;
    entries.reserve(pvy.size());
    for (int v = 0; v < pvy.num_hypotheses; ++v)
        for (int y = 0; y < pvy.num_observations; ++y) {
            double mass = pvy(v, y);
            double den = qy[static_cast<std::size_t>(y)];
            if (mass == 0.0 && den == 0.0)
                continue;
            entries.push_back(RatioEntry{mass, den, mass, den, -1});
        }
    return RatioProfile::build(std::move(entries));
}

SpectrumValue spectrum_supremum(const JointDistribution& pvy,
                                const FiniteMeasure& qy) {
    require_valid(pvy, "spectrum_supremum");
    GammaSweep sweep = linear_tail_sweep(joint_ratio_profile(pvy, qy), 1.0);
    return {sweep.best_value, sweep.best_gamma};
}

double decoder_type1(const JointDistribution& qvy,
                     const RandomizedKernel& decoder) {
    check_decoder_shape(qvy, decoder, "decoder_type1");
    double eps1 = 0.0;
    for (int v = 0; v < qvy.num_hypotheses; ++v)
        for (int y = 0; y < qvy.num_observations; ++y)
            eps1 += qvy(v, y) * decoder(y, v);
    return eps1;
}

DecoderAlphaBound decoder_alpha_bound(const JointDistribution& pvy,
                                      const JointDistribution& qvy,
                                      const RandomizedKernel& decoder) {
    require_valid(pvy, "decoder_alpha_bound: P_VY");
    require_valid(qvy, "decoder_alpha_bound: Q_VY");
    require_valid(decoder, "decoder_alpha_bound");
    if (qvy.num_hypotheses != pvy.num_hypotheses ||
        qvy.num_observations != pvy.num_observations)
        throw std::invalid_argument("decoder_alpha_bound: shape mismatch");
    check_decoder_shape(pvy, decoder, "decoder_alpha_bound");
    double eps1 = decoder_type1(qvy, decoder);
    double a = alpha_beta(pvy.flatten(), qvy.flatten(), eps1).alpha;
    return {a, eps1};
}

SpectrumValue decoder_spectrum_bound(const JointDistribution& pvy,
                                     const JointDistribution& qvy,
                                     const RandomizedKernel& decoder) {
    require_valid(pvy, "decoder_spectrum_bound: P_VY");
    require_valid(qvy, "decoder_spectrum_bound: Q_VY");
    require_valid(decoder, "decoder_spectrum_bound");
    check_decoder_shape(pvy, decoder, "decoder_spectrum_bound");
    double eps1 = decoder_type1(qvy, decoder);

    std::vector<RatioEntry> entries;
    entries.reserve(pvy.size());
    for (int v = 0; v < pvy.num_hypotheses; ++v)
        for (int y = 0; y < pvy.num_observations; ++y) {
            double pm = pvy(v, y);
            double qm = qvy(v, y);
            if (pm == 0.0 && qm == 0.0)
                continue;
            entries.push_back(RatioEntry{pm, qm, pm, qm, -1});
        }
    GammaSweep sweep =
        linear_tail_sweep(RatioProfile::build(std::move(entries)), eps1);
    return {sweep.best_value, sweep.best_gamma};
}

RandomizedKernel max_metric_decoder(const MetricMatrix& q) {
    const int m = q.num_hypotheses;
    const int ny = q.num_observations;
    if (m < 1 || ny < 1 ||
        q.values.size() != static_cast<std::size_t>(m) * ny)
        throw std::invalid_argument("max_metric_decoder: bad metric shape");
    for (double x : q.values)
        if (std::isnan(x) || std::isinf(x))
            throw std::invalid_argument("max_metric_decoder: non-finite metric");

    RandomizedKernel dec(
        ny, m, std::vector<double>(static_cast<std::size_t>(ny) * m, 0.0));
    for (int y = 0; y < ny; ++y) {
        double best = q(0, y);
        for (int v = 1; v < m; ++v)
            best = std::max(best, q(v, y));
        double tol = kTieTol * std::max(1.0, std::abs(best));
        std::vector<int> argmax;
        for (int v = 0; v < m; ++v)
            if (q(v, y) >= best - tol)
                argmax.push_back(v);
        double share = 1.0 / static_cast<double>(argmax.size());
        for (int v : argmax)
            dec.rows[static_cast<std::size_t>(y) * m + v] = share;
    }
    return dec;
}

MetricAuxiliary max_metric_auxiliary(const JointDistribution& pvy,
                                     const MetricMatrix& q) {
    require_valid(pvy, "max_metric_auxiliary");
    if (q.num_hypotheses != pvy.num_hypotheses ||
        q.num_observations != pvy.num_observations)
        throw std::invalid_argument("max_metric_auxiliary: metric shape mismatch");

    const int m = pvy.num_hypotheses;
    const int ny = pvy.num_observations;
    std::vector<double> weight(static_cast<std::size_t>(m) * ny, 0.0);
    double mu_prime = 0.0;
    for (int y = 0; y < ny; ++y) {
        double best = q(0, y);
        for (int v = 1; v < m; ++v)
            best = std::max(best, q(v, y));
        for (int v = 0; v < m; ++v) {
            double pm = pvy(v, y);
            if (pm == 0.0)
                continue; // pointwise scaling of P_VY: zero stays zero
            if (!(q(v, y) > 0.0))
                throw std::domain_error(
                    "max_metric_auxiliary: nonpositive metric on the support "
                    "of P_VY");
            double w = pm * best / q(v, y);
            weight[static_cast<std::size_t>(v) * ny + y] = w;
            mu_prime += w;
        }
    }
    for (double& w : weight)
        w /= mu_prime;
    return {JointDistribution(m, ny, std::move(weight), true), mu_prime};
}

double counting_measure_error(const JointDistribution& pvy) {
    MapSolution sol = map_solve(pvy);
    JointDistribution aux =
        product(FiniteMeasure::counting(pvy.num_hypotheses), sol.qy_star);
    return alpha_beta(pvy.flatten(), aux.flatten(), 1.0).alpha;
}

} // namespace mht
