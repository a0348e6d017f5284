#pragma once

#include <optional>
#include <span>

#include "medsched/model.hpp"

namespace medsched {

struct ConstraintFlags {
    bool overlap_ok = true;
    bool compatibility_ok = true;
    bool travel_ok = true;
    bool fully_scheduled = true;

    [[nodiscard]] bool all_constraints_ok() const { return overlap_ok && compatibility_ok && travel_ok; }
};

struct SolutionMetrics {
    std::optional<double> itr;  // undefined below two assignments
    std::size_t trips = 0;
    ConstraintFlags flags;
};

/// Idle minutes between consecutive appointments over the journey span.
/// Negative gaps from overlapping slots count as zero idle time.
std::optional<double> idle_time_ratio(const Schedule& schedule);

/// Throws Error on an empty schedule.
std::size_t trip_count(const Schedule& schedule);

ConstraintFlags constraint_fulfillment(const Schedule& schedule, std::span<const IncompatibilityRule> rules,
                                       std::size_t act_count);

SolutionMetrics compute_metrics(const Schedule& schedule, std::span<const IncompatibilityRule> rules,
                                std::size_t act_count);

struct MannWhitneyResult {
    double u = 0.0;  // min(U_a, U_b)
    double p = 1.0;  // two-sided
};

/// Rank-sum test with average ranks for ties. The p-value uses the normal
/// approximation with tie-corrected variance and a continuity correction.
MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

double median(std::span<const double> values);

}  // namespace medsched
