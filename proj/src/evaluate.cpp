#include <exception>

#include "medsched/ga.hpp"

namespace medsched {

double evaluate_individual(const Individual& individual, const SearchSpace& space,
                           const ScheduleRequest& request, std::span<const IncompatibilityRule> rules) {
    return fitness(compute_penalties(decode(individual, space), request, rules)).score;
}

std::vector<double> evaluate_population_serial(std::span<const Individual> population,
                                               const SearchSpace& space, const ScheduleRequest& request,
                                               std::span<const IncompatibilityRule> rules) {
    std::vector<double> scores(population.size());
    for (std::size_t i = 0; i < population.size(); ++i)
        scores[i] = evaluate_individual(population[i], space, request, rules);
    return scores;
}

std::vector<double> evaluate_population(std::span<const Individual> population, const SearchSpace& space,
                                        const ScheduleRequest& request,
                                        std::span<const IncompatibilityRule> rules) {
    const auto n = static_cast<std::int64_t>(population.size());
    std::vector<double> scores(population.size());
    // Exceptions may not escape an OpenMP region; capture the first one.
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            scores[static_cast<std::size_t>(i)] =
                evaluate_individual(population[static_cast<std::size_t>(i)], space, request, rules);
        } catch (...) {
#pragma omp critical(medsched_evaluate_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return scores;
}

}  // namespace medsched
