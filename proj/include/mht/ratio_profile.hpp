#pragma once

#include <cstddef>
#include <vector>

// Grouped likelihood-ratio statistics of a pair of measures over a common
// alphabet.  Every exact computation in this library (the Neyman-Pearson
// solver and every threshold sweep) reduces to walking these groups.
//
// Ratios that differ by at most kTieTol * max(1, |r1|, |r2|) are merged into
// one group: quotients of equal rationals can differ in the last ulp, and the
// randomization parameter p of a threshold test is only meaningful when tied
// symbols are treated as one block.

namespace mht {

struct RatioEntry {
    double num = 0; // ratio numerator (num/den, +inf when den == 0, num > 0)
    double den = 0;
    double p = 0;   // mass under the type-0 measure
    double q = 0;   // mass under the type-1 measure
    int index = -1; // caller symbol index, for acceptance vectors
};

struct RatioGroup {
    double ratio = 0;
    double p = 0;
    double q = 0;
    std::vector<int> members;
};

class RatioProfile {
  public:
    // Entries with num == 0 and den == 0 must carry zero mass; they are
    // dropped as irrelevant.
    static RatioProfile build(std::vector<RatioEntry> entries);

    const std::vector<RatioGroup>& groups() const { return groups_; }

    // Symbols with den == 0 and num > 0: ratio +inf, above every threshold.
    double p_infinite() const { return p_inf_; }
    const std::vector<int>& infinite_members() const { return inf_members_; }

    double p_total() const { return p_total_; }
    double q_total() const { return q_total_; }

    // Pr[ratio <= groups()[k].ratio] and the matching Q mass; k in
    // [0, groups().size()).  The +inf bucket never enters these.
    double cum_p(std::size_t k) const { return cum_p_[k]; }
    double cum_q(std::size_t k) const { return cum_q_[k]; }

    // Largest group index whose ratio is <= gamma (ties at tolerance count
    // as <=), or -1 when every group lies above gamma.
    int upper_group(double gamma) const;

    double p_at_or_below(double gamma) const;
    double q_at_or_below(double gamma) const;
    double p_above(double gamma) const; // includes the +inf bucket
    double q_above(double gamma) const;

  private:
    std::vector<RatioGroup> groups_; // ascending ratio
    std::vector<double> cum_p_, cum_q_;
    std::vector<int> inf_members_;
    double p_inf_ = 0, q_inf_ = 0;
    double p_total_ = 0, q_total_ = 0;
};

// True when a and b tie at the library-wide relative ratio tolerance.
bool ratio_close(double a, double b);

} // namespace mht
