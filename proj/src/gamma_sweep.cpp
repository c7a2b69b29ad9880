#include "mht/gamma_sweep.hpp"

namespace mht {

namespace {

void finish(GammaSweep& out) {
    out.best_gamma = out.gammas.front();
    out.best_value = out.values.front();
    for (std::size_t i = 1; i < out.values.size(); ++i)
        if (out.values[i] > out.best_value) {
            out.best_value = out.values[i];
            out.best_gamma = out.gammas[i];
        }
}

} // namespace

GammaSweep linear_tail_sweep(const RatioProfile& profile, double slope) {
    GammaSweep out;
    const auto& groups = profile.groups();
    out.gammas.reserve(groups.size() + 1);
    out.values.reserve(groups.size() + 1);
    out.gammas.push_back(0.0);
    out.values.push_back(profile.p_at_or_below(0.0));
    for (std::size_t k = 0; k < groups.size(); ++k) {
        if (groups[k].ratio <= 0.0)
            continue; // covered by the gamma = 0 row
        out.gammas.push_back(groups[k].ratio);
        out.values.push_back(profile.cum_p(k) - slope * groups[k].ratio);
    }
    finish(out);
    return out;
}

GammaSweep scaled_tail_sweep(const RatioProfile& profile) {
    GammaSweep out;
    const auto& groups = profile.groups();
    out.gammas.reserve(groups.size() + 1);
    out.values.reserve(groups.size() + 1);
    out.gammas.push_back(0.0);
    out.values.push_back(profile.p_at_or_below(0.0));
    for (std::size_t k = 0; k < groups.size(); ++k) {
        if (groups[k].ratio <= 0.0)
            continue;
        out.gammas.push_back(groups[k].ratio);
        out.values.push_back((1.0 - groups[k].ratio) * profile.cum_p(k));
    }
    finish(out);
    return out;
}

} // namespace mht
