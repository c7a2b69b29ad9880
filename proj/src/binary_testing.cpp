#include "mht/binary_testing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mht {

namespace {

void check_same_alphabet(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": size mismatch (" +
                                    std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
}

} // namespace

double type0_error(const FiniteMeasure& p,
                   const std::vector<double>& acceptance) {
    check_same_alphabet(p.size(), acceptance.size(), "type0_error");
    double e0 = 0;
    for (std::size_t y = 0; y < p.size(); ++y) {
        if (acceptance[y] < -kSumTol || acceptance[y] > 1.0 + kSumTol)
            throw std::invalid_argument("type0_error: acceptance outside [0,1]");
        e0 += p[y] * (1.0 - acceptance[y]);
    }
    return e0;
}

double type1_error(const FiniteMeasure& q,
                   const std::vector<double>& acceptance) {
    check_same_alphabet(q.size(), acceptance.size(), "type1_error");
    double e1 = 0;
    for (std::size_t y = 0; y < q.size(); ++y) {
        if (acceptance[y] < -kSumTol || acceptance[y] > 1.0 + kSumTol)
            throw std::invalid_argument("type1_error: acceptance outside [0,1]");
        e1 += q[y] * acceptance[y];
    }
    return e1;
}

double bayes_binary_error(const FiniteMeasure& p, const FiniteMeasure& q,
                          double prior0) {
    require_valid(p, "bayes_binary_error: P");
    require_valid(q, "bayes_binary_error: Q");
    check_same_alphabet(p.size(), q.size(), "bayes_binary_error");
    if (!(prior0 >= 0.0 && prior0 <= 1.0))
        throw std::invalid_argument("bayes_binary_error: prior outside [0,1]");
    double err = 0;
    for (std::size_t y = 0; y < p.size(); ++y)
        err += std::min(prior0 * p[y], (1.0 - prior0) * q[y]);
    return err;
}

RatioProfile likelihood_ratio_profile(const FiniteMeasure& p,
                                      const FiniteMeasure& q) {
    check_same_alphabet(p.size(), q.size(), "likelihood ratio");
    std::vector<RatioEntry> entries;
    entries.reserve(p.size());
    for (std::size_t y = 0; y < p.size(); ++y) {
        if (p[y] == 0.0 && q[y] == 0.0)
            continue; // irrelevant symbol
        entries.push_back(RatioEntry{p[y], q[y], p[y], q[y],
                                     static_cast<int>(y)});
    }
    return RatioProfile::build(std::move(entries));
}

NPSolution alpha_beta_from_profile(const RatioProfile& profile,
                                   std::size_t alphabet_size, double beta) {
    if (beta < 0.0)
        throw std::invalid_argument("alpha_beta: beta < 0");

    NPSolution sol;
    sol.acceptance.assign(alphabet_size, 0.0);

    // Infinite-ratio symbols never consume budget.
    double accepted_p = profile.p_infinite();
    for (int y : profile.infinite_members())
        sol.acceptance[static_cast<std::size_t>(y)] = 1.0;

    const auto& groups = profile.groups();
    double acc_q = 0;
    bool stopped = false;
    for (std::size_t i = groups.size(); i-- > 0 && !stopped;) {
        const RatioGroup& g = groups[i];
        double next_q = acc_q + g.q;
        // Boundary slack scales with the group mass: a budget that misses
        // the boundary by more than that is spent fractionally, keeping the
        // achieved alpha within kSumTol * g.p of the exact optimum.
        if (next_q <= beta + kSumTol * std::min(1.0, g.q)) {
            for (int y : g.members)
                sol.acceptance[static_cast<std::size_t>(y)] = 1.0;
            accepted_p += g.p;
            acc_q = next_q;
            if (std::abs(acc_q - beta) <= kSumTol) {
                // budget met exactly on a group boundary
                sol.gamma = g.ratio;
                sol.p = 1.0;
                stopped = true;
            }
        } else {
            double frac = g.q > 0.0 ? (beta - acc_q) / g.q : 0.0;
            frac = std::clamp(frac, 0.0, 1.0);
            for (int y : g.members)
                sol.acceptance[static_cast<std::size_t>(y)] = frac;
            accepted_p += frac * g.p;
            acc_q += frac * g.q;
            sol.gamma = g.ratio;
            sol.p = frac;
            stopped = true;
        }
    }
    if (!stopped) {
        // beta >= total Q mass: accept everything
        sol.gamma = 0.0;
        sol.p = 1.0;
        for (const RatioGroup& g : groups)
            for (int y : g.members)
                sol.acceptance[static_cast<std::size_t>(y)] = 1.0;
    }

    sol.alpha = std::max(0.0, profile.p_total() - accepted_p);
    sol.beta = acc_q;
    return sol;
}

NPSolution alpha_beta(const FiniteMeasure& p, const FiniteMeasure& q,
                      double beta) {
    require_valid(p, "alpha_beta: P");
    require_valid(q, "alpha_beta: Q");
    return alpha_beta_from_profile(likelihood_ratio_profile(p, q), p.size(),
                                   beta);
}

double relaxation_bound(const FiniteMeasure& p, const FiniteMeasure& q,
                        double beta, double gamma_prime) {
    if (gamma_prime < 0.0)
        throw std::invalid_argument("relaxation_bound: gamma' < 0");
    RatioProfile prof = likelihood_ratio_profile(p, q);
    return prof.p_at_or_below(gamma_prime) - gamma_prime * beta;
}

ConditionedBound poor_verdu_lemma_bound(const FiniteMeasure& p,
                                        const FiniteMeasure& q, double beta,
                                        double gamma_prime) {
    if (gamma_prime < 0.0)
        throw std::invalid_argument("poor_verdu_lemma_bound: gamma' < 0");
    RatioProfile prof = likelihood_ratio_profile(p, q);
    ConditionedBound out;
    out.value = (1.0 - gamma_prime * beta) * prof.p_at_or_below(gamma_prime);
    out.condition_ok =
        beta * prof.p_above(gamma_prime) <= prof.q_above(gamma_prime) + 1e-12;
    return out;
}

} // namespace mht
