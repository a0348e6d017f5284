#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "medsched/model.hpp"

namespace medsched::test {

constexpr Minutes hm(int hours, int minutes = 0) { return hours * 60 + minutes; }

inline TimeSlot slot(std::int32_t id, std::int32_t day, Minutes start_of_day, Minutes duration,
                     std::int32_t facility = 0, std::int32_t exam = 0) {
    TimeSlot s;
    s.id = SlotId{id};
    s.exam = ExamId{exam};
    s.facility = FacilityId{facility};
    s.room = RoomId{facility * 3};
    s.practitioner = PractitionerId{0};
    s.start = at(day, start_of_day);
    s.duration_minutes = duration;
    return s;
}

inline Schedule schedule_of(std::initializer_list<TimeSlot> slots) {
    Schedule s;
    std::size_t act = 0;
    for (const auto& t : slots) s.assignments.push_back({act++, t});
    return s;
}

/// Pearson chi-square statistic against equal expected counts.
inline double chi_square_uniform(std::span<const std::size_t> counts) {
    double total = 0;
    for (auto c : counts) total += static_cast<double>(c);
    const double expected = total / static_cast<double>(counts.size());
    double chi = 0;
    for (auto c : counts) chi += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
    return chi;
}

// 99.9% quantiles of the chi-square distribution (scipy.stats.chi2.ppf).
constexpr double kChi2Df2 = 13.815510557964274;
constexpr double kChi2Df4 = 18.46682695290317;
constexpr double kChi2Df7 = 24.321886347856854;

constexpr int kPropertyCases = 2000;

}  // namespace medsched::test
