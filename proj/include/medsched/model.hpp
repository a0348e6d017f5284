#pragma once

// Domain vocabulary: exams, incompatibility rules, facilities, slots,
// requests and schedules. Time is integer minutes since 00:00 of day 0 of
// the planning horizon.

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace medsched {

using Minutes = std::int64_t;

inline constexpr Minutes kMinutesPerDay = 1440;

/// Tagged integer id; distinct tags do not convert into each other.
template <class Tag>
struct Id {
    std::int32_t value = 0;

    friend constexpr auto operator<=>(Id, Id) = default;
};

using ExamId = Id<struct ExamTag>;
using FacilityId = Id<struct FacilityTag>;
using RoomId = Id<struct RoomTag>;
using PractitionerId = Id<struct PractitionerTag>;
using SlotId = Id<struct SlotTag>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A request in which no act has any candidate slot.
class UnschedulableError : public Error {
public:
    using Error::Error;
};

enum class Specialty { Radiology, Cardiology, Dermatology, GeneralPractice, Gastroenterology };

inline constexpr Specialty kAllSpecialties[] = {
    Specialty::Radiology, Specialty::Cardiology, Specialty::Dermatology,
    Specialty::GeneralPractice, Specialty::Gastroenterology,
};

std::string_view to_string(Specialty s);
Specialty parse_specialty(std::string_view text);

struct ExamType {
    ExamId id;
    std::string name;
    Specialty specialty = Specialty::Radiology;
};

enum class RuleLogic { Before, After, Both };

std::string_view to_string(RuleLogic logic);
RuleLogic parse_rule_logic(std::string_view text);

/// Ordered exam pair (first, second) that must be separated by gap_minutes.
///   Before: first ends >= gap before second starts.
///   After:  second ends >= gap before first starts.
///   Both:   either order, >= gap between them.
struct IncompatibilityRule {
    ExamId first;
    ExamId second;
    RuleLogic logic = RuleLogic::Before;
    Minutes gap_minutes = 0;

    friend bool operator==(const IncompatibilityRule&, const IncompatibilityRule&) = default;
};

struct Facility {
    FacilityId id;
    std::string name;
    std::vector<RoomId> rooms;
};

struct TimeSlot {
    SlotId id;
    ExamId exam;
    FacilityId facility;
    RoomId room;
    PractitionerId practitioner;
    Minutes start = 0;  // absolute minutes since day 0, 00:00
    Minutes duration_minutes = 0;

    [[nodiscard]] constexpr Minutes end() const { return start + duration_minutes; }
    [[nodiscard]] constexpr std::int32_t day() const { return static_cast<std::int32_t>(start / kMinutesPerDay); }
    [[nodiscard]] constexpr Minutes minute_of_day() const { return start % kMinutesPerDay; }

    friend bool operator==(const TimeSlot&, const TimeSlot&) = default;
};

constexpr Minutes at(std::int32_t day, Minutes minute_of_day) {
    return static_cast<Minutes>(day) * kMinutesPerDay + minute_of_day;
}

struct ScheduleRequest {
    std::vector<ExamId> acts;
    std::int32_t start_date = 0;  // day index
    std::optional<std::set<FacilityId>> preferred_facilities;
    std::optional<std::set<PractitionerId>> preferred_practitioners;

    void validate() const;
};

struct Assignment {
    std::size_t act = 0;
    TimeSlot slot;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Schedule {
    std::vector<Assignment> assignments;

    [[nodiscard]] bool empty() const { return assignments.empty(); }
    [[nodiscard]] std::size_t size() const { return assignments.size(); }

    /// Assignments ordered by (start, act index).
    [[nodiscard]] std::vector<Assignment> chronological() const;

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Half-open interval intersection: touching endpoints do not overlap.
constexpr bool slots_overlap(const TimeSlot& a, const TimeSlot& b) {
    return a.start < b.end() && b.start < a.end();
}

/// later.start - earlier.end; negative when the slots overlap.
constexpr Minutes signed_gap(const TimeSlot& earlier, const TimeSlot& later) {
    return later.start - earlier.end();
}

/// Idle minutes between two slots. Requires earlier.end() <= later.start.
Minutes gap_minutes(const TimeSlot& earlier, const TimeSlot& later);

}  // namespace medsched
