#include "mht/ratio_profile.hpp"

#include "mht/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mht {

bool ratio_close(double a, double b) {
    return std::abs(a - b) <=
           kTieTol * std::max({1.0, std::abs(a), std::abs(b)});
}

RatioProfile RatioProfile::build(std::vector<RatioEntry> entries) {
    RatioProfile out;

    std::vector<std::pair<double, const RatioEntry*>> finite;
    finite.reserve(entries.size());
    for (const RatioEntry& e : entries) {
        out.p_total_ += e.p;
        out.q_total_ += e.q;
        if (e.den > 0.0) {
            finite.emplace_back(e.num / e.den, &e);
        } else if (e.num > 0.0) {
            out.p_inf_ += e.p;
            out.q_inf_ += e.q;
            if (e.index >= 0)
                out.inf_members_.push_back(e.index);
        } else {
            // num == den == 0: undefined ratio, legal only with zero mass
            if (e.p != 0.0 || e.q != 0.0)
                throw std::invalid_argument(
                    "ratio profile: 0/0 entry with nonzero mass");
        }
    }

    std::sort(finite.begin(), finite.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // Grouping is anchored on the smallest ratio of the current group so a
    // chain of pairwise-close values cannot drift across the tolerance.
    for (const auto& [r, e] : finite) {
        if (out.groups_.empty() || !ratio_close(out.groups_.back().ratio, r)) {
            out.groups_.push_back(RatioGroup{r, 0.0, 0.0, {}});
        }
        RatioGroup& g = out.groups_.back();
        g.p += e->p;
        g.q += e->q;
        if (e->index >= 0)
            g.members.push_back(e->index);
    }

    out.cum_p_.resize(out.groups_.size());
    out.cum_q_.resize(out.groups_.size());
    double cp = 0, cq = 0;
    for (std::size_t k = 0; k < out.groups_.size(); ++k) {
        cp += out.groups_[k].p;
        cq += out.groups_[k].q;
        out.cum_p_[k] = cp;
        out.cum_q_[k] = cq;
    }
    return out;
}

int RatioProfile::upper_group(double gamma) const {
    // Partition point on exact <=, then admit the next group if it ties with
    // gamma at tolerance.  Adjacent group anchors are more than kTieTol
    // apart, so at most one extra group can qualify.
    auto it = std::upper_bound(
        groups_.begin(), groups_.end(), gamma,
        [](double g, const RatioGroup& grp) { return g < grp.ratio; });
    int k = static_cast<int>(it - groups_.begin()) - 1;
    if (k + 1 < static_cast<int>(groups_.size()) &&
        ratio_close(groups_[k + 1].ratio, gamma))
        ++k;
    return k;
}

double RatioProfile::p_at_or_below(double gamma) const {
    int k = upper_group(gamma);
    return k < 0 ? 0.0 : cum_p_[static_cast<std::size_t>(k)];
}

double RatioProfile::q_at_or_below(double gamma) const {
    int k = upper_group(gamma);
    return k < 0 ? 0.0 : cum_q_[static_cast<std::size_t>(k)];
}

double RatioProfile::p_above(double gamma) const {
    double below = p_at_or_below(gamma);
    double total_finite = groups_.empty() ? 0.0 : cum_p_.back();
    return (total_finite - below) + p_inf_;
}

double RatioProfile::q_above(double gamma) const {
    double below = q_at_or_below(gamma);
    double total_finite = groups_.empty() ? 0.0 : cum_q_.back();
    return (total_finite - below) + q_inf_;
}

} // namespace mht
