#pragma once

#include <span>

#include "medsched/model.hpp"

namespace medsched {

inline constexpr double kMissingSlotPenalty = 1000.0;
inline constexpr double kHardViolationPenalty = 1000.0;
inline constexpr double kTripPenalty = 100.0;
inline constexpr double kTravelGapPenalty = 600.0;
inline constexpr double kWaitMinutesPerPenaltyPoint = 10.0;

/// Itemized penalty terms. Every term is non-negative.
struct PenaltyBreakdown {
    double missing_slot = 0.0;     // 1000 when assignment count != act count
    double hard_violations = 0.0;  // 1000 per overlap and per incompatibility breach
    double trips = 0.0;            // 100 per trip
    double travel_gap = 0.0;       // 600 per short inter-facility transfer
    double wait = 0.0;             // idle minutes between consecutive appointments / 10
    double lead = 0.0;             // whole days from start_date to first appointment

    [[nodiscard]] double total() const {
        return missing_slot + hard_violations + trips + travel_gap + wait + lead;
    }
};

struct FitnessValue {
    double score = 0.0;  // in (0, 1]
};

PenaltyBreakdown compute_penalties(const Schedule& schedule, const ScheduleRequest& request,
                                   std::span<const IncompatibilityRule> rules);

/// 1 / (1 + total penalties).
FitnessValue fitness(const PenaltyBreakdown& breakdown);

/// Sum of positive gaps between chronologically consecutive assignments.
Minutes total_wait_minutes(const Schedule& schedule);

}  // namespace medsched
