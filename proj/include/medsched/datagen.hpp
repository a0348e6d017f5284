#pragma once

// Seeded synthetic world: exam catalog, incompatibility rules, slot inventory
// and sampled patient requests.

#include <cstdint>
#include <random>
#include <vector>

#include "medsched/model.hpp"

namespace medsched {

/// All randomness in the library flows through a 64-bit Mersenne Twister
/// (MT19937-64). Streams are derived from a seed and a stream tag.
using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t stream);

/// Mixes a base seed with an index (splitmix64 finalizer). Used to give each
/// trial and each algorithm its own reproducible seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct WorldConfig {
    std::uint64_t seed = 0;
    std::int32_t horizon_days = 30;
    std::int32_t facilities = 4;
    std::int32_t rooms_per_facility = 3;
    Minutes day_open = 540;    // 09:00
    Minutes day_close = 1260;  // 21:00
    std::int32_t practitioner_pool = 4;
    std::int32_t rule_count = 15;
    std::int32_t specialties = 5;
    std::int32_t exams_per_specialty = 10;
    std::vector<Minutes> duration_choices{15, 30, 45, 60, 90};
    std::vector<Minutes> gap_choices{30, 60, 1440};

    /// Throws Error on non-positive counts, an empty or inverted day window,
    /// or empty choice lists.
    void validate() const;
};

struct World {
    WorldConfig config;
    std::vector<ExamType> catalog;
    std::vector<IncompatibilityRule> rules;
    std::vector<Facility> facilities;
    std::vector<TimeSlot> slots;
};

std::vector<ExamType> generate_catalog(const WorldConfig& config);

/// Draws config.rule_count rules with distinct ordered exam pairs. Logic and
/// gap are uniform. Throws Error if rule_count exceeds the number of distinct
/// ordered pairs.
std::vector<IncompatibilityRule> generate_rules(const std::vector<ExamType>& catalog,
                                                const WorldConfig& config);

std::vector<Facility> generate_facilities(const WorldConfig& config);

/// Packs every (day, facility, room) sequentially from day_open. Each slot
/// draws a duration, a practitioner and an exam uniformly; packing for the
/// room-day stops at the first slot that would run past day_close.
std::vector<TimeSlot> generate_slots(const std::vector<ExamType>& catalog, const WorldConfig& config);

/// n_acts distinct exam types in random order, start_date = day 0, no
/// preference filters.
ScheduleRequest generate_request(const std::vector<ExamType>& catalog, std::uint64_t seed,
                                 std::int32_t n_acts);

World generate_world(const WorldConfig& config);

}  // namespace medsched
