#pragma once

#include "medsched/datagen.hpp"
#include "medsched/ga.hpp"

namespace medsched {

/// First-come first-served: acts in request order, each takes its earliest
/// candidate not already taken by an earlier act. No feasibility checks.
Schedule fcfs_schedule(const SearchSpace& space, const ScheduleRequest& request);

/// One uniformly drawn candidate per act (same draw as unordered GA init).
Schedule random_schedule(const SearchSpace& space, const ScheduleRequest& request, Rng& rng);

}  // namespace medsched
