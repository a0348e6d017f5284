#pragma once

// Feasibility checks over decoded schedules: overlaps, incompatibility rules,
// trip segmentation and inter-facility travel gaps.

#include <span>
#include <string>
#include <vector>

#include "medsched/model.hpp"

namespace medsched {

/// A new trip starts after a facility change or an idle gap strictly above this.
inline constexpr Minutes kTripBreakMinutes = 120;
/// Consecutive appointments at different facilities need at least this gap.
inline constexpr Minutes kMinTravelGapMinutes = 180;

enum class ViolationKind { Overlap, Incompatibility, TravelGap, MissingSlot };

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind = ViolationKind::Overlap;
    std::vector<std::size_t> acts;
    std::string detail;
};

struct Trip {
    FacilityId facility;
    std::vector<Assignment> assignments;  // chronological
};

struct TripSegmentation {
    std::vector<Trip> segments;
};

/// One violation per unordered pair of overlapping assignments.
std::vector<Violation> find_overlaps(const Schedule& schedule);

/// One violation per failing (rule, assignment pair). Rules whose exams are
/// absent from the schedule are vacuously satisfied.
std::vector<Violation> check_incompatibilities(const Schedule& schedule,
                                               std::span<const IncompatibilityRule> rules);

/// True iff the ordered pair (first_slot holds rule.first, second_slot holds
/// rule.second) satisfies the rule.
bool rule_satisfied(const IncompatibilityRule& rule, const TimeSlot& first_slot, const TimeSlot& second_slot);

/// Throws Error on an empty schedule.
TripSegmentation segment_trips(const Schedule& schedule);

/// Trip count without materializing the segments; 0 for an empty schedule.
std::size_t count_trips(const Schedule& schedule);

std::vector<Violation> check_travel_gaps(const Schedule& schedule);

struct ActOrder {
    std::vector<std::size_t> order;  // permutation of act indices
    bool cycle = false;
};

/// Topological order of act indices under the precedence implied by Before
/// and After rules. Ties go to the lower index. A cycle never fails: when no
/// act is free, the lowest remaining index is emitted and `cycle` is set.
ActOrder optimal_act_order(std::span<const ExamId> acts, std::span<const IncompatibilityRule> rules);

}  // namespace medsched
