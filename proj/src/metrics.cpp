#include "medsched/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "medsched/constraints.hpp"

namespace medsched {

std::optional<double> idle_time_ratio(const Schedule& schedule) {
    if (schedule.size() < 2) return std::nullopt;
    const auto sorted = schedule.chronological();
    Minutes idle = 0;
    Minutes last_end = sorted.front().slot.end();
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        idle += std::max<Minutes>(0, signed_gap(sorted[i - 1].slot, sorted[i].slot));
        last_end = std::max(last_end, sorted[i].slot.end());
    }
    const Minutes span = last_end - sorted.front().slot.start;
    return static_cast<double>(idle) / static_cast<double>(span);
}

std::size_t trip_count(const Schedule& schedule) {
    return segment_trips(schedule).segments.size();
}

ConstraintFlags constraint_fulfillment(const Schedule& schedule, std::span<const IncompatibilityRule> rules,
                                       std::size_t act_count) {
    ConstraintFlags flags;
    flags.overlap_ok = find_overlaps(schedule).empty();
    flags.compatibility_ok = check_incompatibilities(schedule, rules).empty();
    flags.travel_ok = check_travel_gaps(schedule).empty();
    flags.fully_scheduled = schedule.size() == act_count;
    return flags;
}

SolutionMetrics compute_metrics(const Schedule& schedule, std::span<const IncompatibilityRule> rules,
                                std::size_t act_count) {
    SolutionMetrics m;
    m.itr = idle_time_ratio(schedule);
    m.trips = count_trips(schedule);
    m.flags = constraint_fulfillment(schedule, rules, act_count);
    return m;
}

MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw Error("mann_whitney_u needs two non-empty samples");
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const std::size_t n = n1 + n2;

    struct Entry {
        double value;
        bool from_a;
    };
    std::vector<Entry> pooled;
    pooled.reserve(n);
    for (double v : a) pooled.push_back({v, true});
    for (double v : b) pooled.push_back({v, false});
    std::sort(pooled.begin(), pooled.end(), [](const Entry& x, const Entry& y) { return x.value < y.value; });

    double rank_sum_a = 0.0;
    double tie_term = 0.0;  // sum of t^3 - t over tie groups
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && pooled[j].value == pooled[i].value) ++j;
        const double t = static_cast<double>(j - i);
        const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k)
            if (pooled[k].from_a) rank_sum_a += avg_rank;
        tie_term += t * t * t - t;
        i = j;
    }

    const double dn1 = static_cast<double>(n1);
    const double dn2 = static_cast<double>(n2);
    const double dn = static_cast<double>(n);
    const double u_a = rank_sum_a - dn1 * (dn1 + 1.0) / 2.0;
    const double u_b = dn1 * dn2 - u_a;

    MannWhitneyResult result;
    result.u = std::min(u_a, u_b);

    const double mean = dn1 * dn2 / 2.0;
    const double variance = n > 1 ? dn1 * dn2 / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0))) : 0.0;
    if (variance <= 0.0) {
        result.p = 1.0;
        return result;
    }
    const double deviation = std::max(0.0, std::abs(u_a - mean) - 0.5);
    const double z = deviation / std::sqrt(variance);
    result.p = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    return result;
}

double median(std::span<const double> values) {
    if (values.empty()) throw Error("median of an empty sample");
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

}  // namespace medsched
