#include "mht/converse_bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace mht {

namespace {

FiniteMeasure row_conditional(const JointDistribution& pvy, int v,
                              double pv) {
    std::vector<double> w(pvy.num_observations);
    for (int y = 0; y < pvy.num_observations; ++y)
        w[y] = pvy(v, y) / pv;
    return FiniteMeasure(std::move(w));
}

FiniteMeasure checked_prior(const JointDistribution& pvy, const char* what) {
    FiniteMeasure pv = marginals(pvy).prior;
    for (std::size_t v = 0; v < pv.size(); ++v)
        if (pv[v] <= 0.0)
            throw std::invalid_argument(std::string(what) +
                                        ": zero-prior hypothesis " +
                                        std::to_string(v));
    return pv;
}

} // namespace

GammaSweep verdu_han(const JointDistribution& pvy,
                     const std::optional<FiniteMeasure>& qy) {
    require_valid(pvy, "verdu_han");
    const FiniteMeasure& q = qy ? *qy : marginals(pvy).observation;
    return linear_tail_sweep(joint_ratio_profile(pvy, q), 1.0);
}

GammaSweep wolfowitz(const JointDistribution& pvy, const FiniteMeasure& qy) {
    require_valid(pvy, "wolfowitz");
    FiniteMeasure pv = checked_prior(pvy, "wolfowitz");

    // Conditional ratio profiles share the jump points of the joint profile,
    // so one candidate list covers every hypothesis.
    RatioProfile joint = joint_ratio_profile(pvy, qy);
    std::vector<RatioProfile> per_v;
    per_v.reserve(pvy.num_hypotheses);
    for (int v = 0; v < pvy.num_hypotheses; ++v) {
        std::vector<RatioEntry> entries;
        for (int y = 0; y < pvy.num_observations; ++y) {
            double num = pvy(v, y);
            double den = qy[static_cast<std::size_t>(y)];
            if (num == 0.0 && den == 0.0)
                continue;
            entries.push_back(RatioEntry{num, den, num / pv[v], 0.0, -1});
        }
        per_v.push_back(RatioProfile::build(std::move(entries)));
    }

    GammaSweep out;
    auto eval = [&](double gamma) {
        double worst = 2.0;
        for (const RatioProfile& prof : per_v)
            worst = std::min(worst, prof.p_at_or_below(gamma));
        return worst - gamma;
    };
    out.gammas.push_back(0.0);
    out.values.push_back(eval(0.0));
    for (const RatioGroup& g : joint.groups()) {
        if (g.ratio <= 0.0)
            continue;
        out.gammas.push_back(g.ratio);
        out.values.push_back(eval(g.ratio));
    }
    out.best_gamma = out.gammas.front();
    out.best_value = out.values.front();
    for (std::size_t i = 1; i < out.values.size(); ++i)
        if (out.values[i] > out.best_value) {
            out.best_value = out.values[i];
            out.best_gamma = out.gammas[i];
        }
    return out;
}

ConditionedBound poor_verdu(const JointDistribution& pvy,
                            const FiniteMeasure& qy, double gamma) {
    require_valid(pvy, "poor_verdu");
    if (gamma < 0.0)
        throw std::invalid_argument("poor_verdu: gamma < 0");
    RatioProfile prof = joint_ratio_profile(pvy, qy);
    ConditionedBound out;
    out.value = (1.0 - gamma) * prof.p_at_or_below(gamma);
    // q_above counts Q_Y(y) once per hypothesis in the upper tail, which is
    // exactly the right-hand side of the side condition.
    out.condition_ok = prof.p_above(gamma) <= prof.q_above(gamma) + 1e-12;
    return out;
}

GammaSweep tight_poor_verdu(const JointDistribution& pvy) {
    require_valid(pvy, "tight_poor_verdu");
    MapSolution sol = map_solve(pvy);
    return scaled_tail_sweep(joint_ratio_profile(pvy, sol.qy_star));
}

BankOfTests bank_of_tests(const JointDistribution& pvy,
                          const FiniteMeasure& qy) {
    require_valid(pvy, "bank_of_tests");
    if (qy.size() != static_cast<std::size_t>(pvy.num_observations))
        throw std::invalid_argument("bank_of_tests: Q_Y size mismatch");
    FiniteMeasure pv = checked_prior(pvy, "bank_of_tests");
    MapSolution sol = map_solve(pvy);

    // Budgets follow the uniform-tie MAP decoder.  Another tie-break would
    // shift budget between symbols of equal likelihood ratio, which leaves
    // the value at qy_star unchanged (asserted by the property tests).
    BankOfTests out;
    out.budgets.assign(pvy.num_hypotheses, 0.0);
    for (int v = 0; v < pvy.num_hypotheses; ++v)
        for (int y = 0; y < pvy.num_observations; ++y)
            out.budgets[v] +=
                qy[static_cast<std::size_t>(y)] * sol.decoder(y, v);

    for (int v = 0; v < pvy.num_hypotheses; ++v) {
        FiniteMeasure row = row_conditional(pvy, v, pv[v]);
        FiniteMeasure q = qy;
        q.normalized = false; // any nonnegative measure is acceptable here
        out.value += pv[v] * alpha_beta(row, q, out.budgets[v]).alpha;
    }
    return out;
}

} // namespace mht
