#include "medsched/constraints.hpp"

#include <algorithm>
#include <queue>

namespace medsched {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::Incompatibility: return "incompatibility";
    case ViolationKind::TravelGap: return "travel_gap";
    case ViolationKind::MissingSlot: return "missing_slot";
    }
    return "?";
}

std::vector<Violation> find_overlaps(const Schedule& schedule) {
    std::vector<Violation> out;
    const auto& a = schedule.assignments;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (!slots_overlap(a[i].slot, a[j].slot)) continue;
            out.push_back({ViolationKind::Overlap, {a[i].act, a[j].act},
                           "slots " + std::to_string(a[i].slot.id.value) + " and " +
                               std::to_string(a[j].slot.id.value) + " overlap"});
        }
    }
    return out;
}

bool rule_satisfied(const IncompatibilityRule& rule, const TimeSlot& first_slot, const TimeSlot& second_slot) {
    const bool first_then_second = first_slot.end() + rule.gap_minutes <= second_slot.start;
    const bool second_then_first = second_slot.end() + rule.gap_minutes <= first_slot.start;
    switch (rule.logic) {
    case RuleLogic::Before: return first_then_second;
    case RuleLogic::After: return second_then_first;
    case RuleLogic::Both: return first_then_second || second_then_first;
    }
    return false;
}

std::vector<Violation> check_incompatibilities(const Schedule& schedule,
                                               std::span<const IncompatibilityRule> rules) {
    std::vector<Violation> out;
    const auto& a = schedule.assignments;
    for (const auto& rule : rules) {
        for (const auto& p : a) {
            if (p.slot.exam != rule.first) continue;
            for (const auto& q : a) {
                if (&p == &q || q.slot.exam != rule.second) continue;
                if (rule_satisfied(rule, p.slot, q.slot)) continue;
                out.push_back({ViolationKind::Incompatibility, {p.act, q.act},
                               "exam " + std::to_string(rule.first.value) + " " +
                                   std::string(to_string(rule.logic)) + " exam " +
                                   std::to_string(rule.second.value) + " needs " +
                                   std::to_string(rule.gap_minutes) + " min"});
            }
        }
    }
    return out;
}

namespace {

bool starts_new_trip(const Assignment& prev, const Assignment& next) {
    return prev.slot.facility != next.slot.facility || signed_gap(prev.slot, next.slot) > kTripBreakMinutes;
}

}  // namespace

TripSegmentation segment_trips(const Schedule& schedule) {
    if (schedule.empty()) throw Error("segment_trips: empty schedule");
    const auto sorted = schedule.chronological();
    TripSegmentation result;
    result.segments.push_back({sorted.front().slot.facility, {sorted.front()}});
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (starts_new_trip(sorted[i - 1], sorted[i]))
            result.segments.push_back({sorted[i].slot.facility, {}});
        result.segments.back().assignments.push_back(sorted[i]);
    }
    return result;
}

std::size_t count_trips(const Schedule& schedule) {
    if (schedule.empty()) return 0;
    const auto sorted = schedule.chronological();
    std::size_t trips = 1;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (starts_new_trip(sorted[i - 1], sorted[i])) ++trips;
    return trips;
}

std::vector<Violation> check_travel_gaps(const Schedule& schedule) {
    std::vector<Violation> out;
    const auto sorted = schedule.chronological();
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const auto& prev = sorted[i - 1];
        const auto& next = sorted[i];
        if (prev.slot.facility == next.slot.facility) continue;
        const Minutes gap = signed_gap(prev.slot, next.slot);
        if (gap >= kMinTravelGapMinutes) continue;
        out.push_back({ViolationKind::TravelGap, {prev.act, next.act},
                       "facility change with " + std::to_string(gap) + " min gap"});
    }
    return out;
}

ActOrder optimal_act_order(std::span<const ExamId> acts, std::span<const IncompatibilityRule> rules) {
    const std::size_t n = acts.size();
    std::vector<std::vector<std::size_t>> successors(n);
    std::vector<std::size_t> indegree(n, 0);

    auto add_edge = [&](std::size_t from, std::size_t to) {
        successors[from].push_back(to);
        ++indegree[to];
    };
    for (const auto& rule : rules) {
        if (rule.logic == RuleLogic::Both) continue;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || acts[i] != rule.first || acts[j] != rule.second) continue;
                if (rule.logic == RuleLogic::Before)
                    add_edge(i, j);
                else
                    add_edge(j, i);
            }
        }
    }

    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0) ready.push(i);

    ActOrder result;
    std::vector<bool> emitted(n, false);
    auto emit = [&](std::size_t v) {
        emitted[v] = true;
        result.order.push_back(v);
        for (auto w : successors[v])
            if (!emitted[w] && --indegree[w] == 0) ready.push(w);
    };

    while (result.order.size() < n) {
        if (ready.empty()) {
            // Stalled on a cycle: release the lowest remaining index.
            result.cycle = true;
            const auto it = std::find(emitted.begin(), emitted.end(), false);
            emit(static_cast<std::size_t>(it - emitted.begin()));
            continue;
        }
        const auto v = ready.top();
        ready.pop();
        if (!emitted[v]) emit(v);
    }
    return result;
}

}  // namespace medsched
