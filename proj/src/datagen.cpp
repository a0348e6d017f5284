#include "medsched/datagen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace medsched {

namespace {

enum Stream : std::uint64_t { kRules = 1, kSlots = 2, kRequest = 3 };

template <class T>
const T& pick(const std::vector<T>& choices, Rng& rng) {
    std::uniform_int_distribution<std::size_t> dist(0, choices.size() - 1);
    return choices[dist(rng)];
}

std::string two_digits(int n) {
    return (n < 10 ? "0" : "") + std::to_string(n);
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void WorldConfig::validate() const {
    if (horizon_days <= 0) throw Error("horizon_days must be positive");
    if (facilities <= 0) throw Error("facilities must be positive");
    if (rooms_per_facility <= 0) throw Error("rooms_per_facility must be positive");
    if (practitioner_pool <= 0) throw Error("practitioner_pool must be positive");
    if (rule_count < 0) throw Error("rule_count must be non-negative");
    if (specialties <= 0 || specialties > static_cast<std::int32_t>(std::size(kAllSpecialties)))
        throw Error("specialties must be in [1, 5]");
    if (exams_per_specialty <= 0) throw Error("exams_per_specialty must be positive");
    if (day_open < 0 || day_close > kMinutesPerDay || day_open >= day_close)
        throw Error("day window must satisfy 0 <= day_open < day_close <= 1440");
    if (duration_choices.empty()) throw Error("duration_choices is empty");
    if (gap_choices.empty()) throw Error("gap_choices is empty");
    for (auto d : duration_choices)
        if (d <= 0) throw Error("slot durations must be positive");
    for (auto g : gap_choices)
        if (g < 0) throw Error("rule gaps must be non-negative");
}

std::vector<ExamType> generate_catalog(const WorldConfig& config) {
    config.validate();
    std::vector<ExamType> catalog;
    catalog.reserve(static_cast<std::size_t>(config.specialties * config.exams_per_specialty));
    std::int32_t next = 0;
    for (std::int32_t s = 0; s < config.specialties; ++s) {
        const Specialty specialty = kAllSpecialties[s];
        for (std::int32_t e = 0; e < config.exams_per_specialty; ++e) {
            catalog.push_back({ExamId{next++}, std::string(to_string(specialty)) + "-" + two_digits(e + 1),
                               specialty});
        }
    }
    return catalog;
}

std::vector<IncompatibilityRule> generate_rules(const std::vector<ExamType>& catalog,
                                                const WorldConfig& config) {
    config.validate();
    if (config.rule_count == 0) return {};
    if (catalog.size() < 2) throw Error("rule generation needs at least two exam types");
    const auto n = static_cast<std::int64_t>(catalog.size());
    if (config.rule_count > n * (n - 1))
        throw Error("rule_count exceeds the number of distinct ordered exam pairs");

    Rng rng = make_rng(config.seed, kRules);
    std::uniform_int_distribution<std::size_t> first_dist(0, catalog.size() - 1);
    std::uniform_int_distribution<std::size_t> second_dist(0, catalog.size() - 2);
    std::uniform_int_distribution<int> logic_dist(0, 2);

    std::set<std::pair<std::int32_t, std::int32_t>> seen;
    std::vector<IncompatibilityRule> rules;
    rules.reserve(static_cast<std::size_t>(config.rule_count));
    while (rules.size() < static_cast<std::size_t>(config.rule_count)) {
        const std::size_t i = first_dist(rng);
        std::size_t j = second_dist(rng);
        if (j >= i) ++j;
        const auto logic = static_cast<RuleLogic>(logic_dist(rng));
        const Minutes gap = pick(config.gap_choices, rng);
        if (!seen.insert({catalog[i].id.value, catalog[j].id.value}).second) continue;
        rules.push_back({catalog[i].id, catalog[j].id, logic, gap});
    }
    return rules;
}

std::vector<Facility> generate_facilities(const WorldConfig& config) {
    config.validate();
    std::vector<Facility> facilities;
    for (std::int32_t f = 0; f < config.facilities; ++f) {
        Facility facility{FacilityId{f}, "Facility-" + std::to_string(f + 1), {}};
        for (std::int32_t r = 0; r < config.rooms_per_facility; ++r)
            facility.rooms.push_back(RoomId{f * config.rooms_per_facility + r});
        facilities.push_back(std::move(facility));
    }
    return facilities;
}

std::vector<TimeSlot> generate_slots(const std::vector<ExamType>& catalog, const WorldConfig& config) {
    config.validate();
    if (catalog.empty()) throw Error("slot generation needs a non-empty catalog");

    Rng rng = make_rng(config.seed, kSlots);
    std::uniform_int_distribution<std::int32_t> practitioner_dist(0, config.practitioner_pool - 1);
    std::uniform_int_distribution<std::size_t> exam_dist(0, catalog.size() - 1);

    std::vector<TimeSlot> slots;
    std::int32_t next_id = 0;
    for (std::int32_t day = 0; day < config.horizon_days; ++day) {
        for (std::int32_t f = 0; f < config.facilities; ++f) {
            for (std::int32_t r = 0; r < config.rooms_per_facility; ++r) {
                Minutes t = config.day_open;
                for (;;) {
                    const Minutes duration = pick(config.duration_choices, rng);
                    if (t + duration > config.day_close) break;
                    TimeSlot slot;
                    slot.id = SlotId{next_id++};
                    slot.facility = FacilityId{f};
                    slot.room = RoomId{f * config.rooms_per_facility + r};
                    slot.practitioner = PractitionerId{practitioner_dist(rng)};
                    slot.exam = catalog[exam_dist(rng)].id;
                    slot.start = at(day, t);
                    slot.duration_minutes = duration;
                    slots.push_back(slot);
                    t += duration;
                }
            }
        }
    }
    return slots;
}

ScheduleRequest generate_request(const std::vector<ExamType>& catalog, std::uint64_t seed,
                                 std::int32_t n_acts) {
    if (n_acts < 1 || static_cast<std::size_t>(n_acts) > catalog.size())
        throw Error("n_acts must be in [1, catalog size]");
    Rng rng = make_rng(seed, kRequest);
    std::vector<std::size_t> idx(catalog.size());
    std::iota(idx.begin(), idx.end(), 0);
    // Partial Fisher-Yates: the first n_acts positions are a uniform draw.
    for (std::size_t i = 0; i < static_cast<std::size_t>(n_acts); ++i) {
        std::uniform_int_distribution<std::size_t> dist(i, idx.size() - 1);
        std::swap(idx[i], idx[dist(rng)]);
    }
    ScheduleRequest request;
    for (std::int32_t i = 0; i < n_acts; ++i) request.acts.push_back(catalog[idx[static_cast<std::size_t>(i)]].id);
    request.start_date = 0;
    return request;
}

World generate_world(const WorldConfig& config) {
    config.validate();
    World world;
    world.config = config;
    world.catalog = generate_catalog(config);
    world.rules = generate_rules(world.catalog, config);
    world.facilities = generate_facilities(config);
    world.slots = generate_slots(world.catalog, config);
    return world;
}

}  // namespace medsched
