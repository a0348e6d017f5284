#include "medsched/fitness.hpp"

#include <algorithm>

#include "medsched/constraints.hpp"

namespace medsched {

Minutes total_wait_minutes(const Schedule& schedule) {
    const auto sorted = schedule.chronological();
    Minutes wait = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        wait += std::max<Minutes>(0, signed_gap(sorted[i - 1].slot, sorted[i].slot));
    return wait;
}

PenaltyBreakdown compute_penalties(const Schedule& schedule, const ScheduleRequest& request,
                                   std::span<const IncompatibilityRule> rules) {
    PenaltyBreakdown p;
    if (schedule.size() != request.acts.size()) p.missing_slot = kMissingSlotPenalty;

    const auto hard = find_overlaps(schedule).size() + check_incompatibilities(schedule, rules).size();
    p.hard_violations = kHardViolationPenalty * static_cast<double>(hard);
    p.trips = kTripPenalty * static_cast<double>(count_trips(schedule));
    p.travel_gap = kTravelGapPenalty * static_cast<double>(check_travel_gaps(schedule).size());
    p.wait = static_cast<double>(total_wait_minutes(schedule)) / kWaitMinutesPerPenaltyPoint;

    if (!schedule.empty()) {
        const auto first = std::min_element(
            schedule.assignments.begin(), schedule.assignments.end(),
            [](const Assignment& a, const Assignment& b) { return a.slot.start < b.slot.start; });
        p.lead = static_cast<double>(std::max(0, first->slot.day() - request.start_date));
    }
    return p;
}

FitnessValue fitness(const PenaltyBreakdown& breakdown) {
    return {1.0 / (1.0 + breakdown.total())};
}

}  // namespace medsched
