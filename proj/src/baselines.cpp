#include "medsched/baselines.hpp"

#include <set>

namespace medsched {

Schedule fcfs_schedule(const SearchSpace& space, const ScheduleRequest& request) {
    if (space.act_count() != request.acts.size()) throw Error("search space does not match request");
    Schedule schedule;
    std::set<SlotId> taken;
    for (std::size_t act = 0; act < space.act_count(); ++act) {
        for (const auto& slot : space.per_act_slots[act]) {
            if (taken.insert(slot.id).second) {
                schedule.assignments.push_back({act, slot});
                break;
            }
        }
    }
    return schedule;
}

Schedule random_schedule(const SearchSpace& space, const ScheduleRequest& request, Rng& rng) {
    if (space.act_count() != request.acts.size()) throw Error("search space does not match request");
    return decode(sample_unordered(space, rng), space);
}

}  // namespace medsched
