#pragma once

// Genetic algorithm over per-act slot choices.
//
// An individual is conceptually a concatenation of one-hot blocks, one block
// per requested act, with exactly one bit set per block. It is stored
// compactly as the selected position within each block.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "medsched/constraints.hpp"
#include "medsched/datagen.hpp"
#include "medsched/fitness.hpp"
#include "medsched/model.hpp"

namespace medsched {

/// Candidate slots for each act, sorted by (start, slot id).
struct SearchSpace {
    std::vector<std::vector<TimeSlot>> per_act_slots;

    [[nodiscard]] std::size_t act_count() const { return per_act_slots.size(); }
    [[nodiscard]] bool all_empty() const;
    [[nodiscard]] std::size_t bit_length() const;
};

/// Gene value for an act whose block has no candidates.
inline constexpr std::int32_t kUnassigned = -1;

struct Individual {
    std::vector<std::int32_t> genes;

    friend bool operator==(const Individual&, const Individual&) = default;
};

enum class InitVariant { Unordered, Ordered };

std::string_view to_string(InitVariant v);
InitVariant parse_init_variant(std::string_view text);

struct GAConfig {
    std::int32_t population = 100;
    std::int32_t generations = 200;
    std::int32_t tournament_k = 7;
    double mutation_rate = 0.10;
    InitVariant variant = InitVariant::Unordered;
    std::uint64_t seed = 0;

    void validate() const;
};

struct GenerationStats {
    std::int32_t generation = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    Individual best_individual;
};

struct EvolutionResult {
    Individual best_individual;
    Schedule best;
    double best_fitness = 0.0;
    std::vector<GenerationStats> history;  // one entry per generation, generation 0 = initial population
};

SearchSpace filter_search_space(std::span<const TimeSlot> slots, const ScheduleRequest& request);

/// Throws Error unless `individual` has one valid gene per block.
void check_individual(const Individual& individual, const SearchSpace& space);

/// Expands to the concatenated one-hot bit string.
std::vector<std::uint8_t> to_one_hot(const Individual& individual, const SearchSpace& space);
/// Inverse of to_one_hot; throws Error if any non-empty block is not one-hot.
Individual from_one_hot(std::span<const std::uint8_t> bits, const SearchSpace& space);

/// Each gene uniform over its block, independently.
Individual sample_unordered(const SearchSpace& space, Rng& rng);

/// Acts visited in `order`; each gene drawn uniformly among candidates that
/// start at or after the end of the previously chosen slot, falling back to
/// the whole block when none qualify.
Individual sample_ordered(const SearchSpace& space, std::span<const std::size_t> order, Rng& rng);

std::vector<Individual> init_population(const SearchSpace& space, const GAConfig& config,
                                        std::span<const std::size_t> order, Rng& rng);

/// Throws Error on a gene outside its block.
Schedule decode(const Individual& individual, const SearchSpace& space);

/// Samples k indices with replacement; returns the fittest, lowest index on ties.
std::size_t tournament_index(std::span<const double> fitnesses, std::int32_t k, Rng& rng);

const Individual& tournament_select(std::span<const Individual> population, std::span<const double> fitnesses,
                                    std::int32_t k, Rng& rng);

/// Single-point crossover with the cut restricted to block boundaries.
std::pair<Individual, Individual> crossover_at(const Individual& a, const Individual& b, std::size_t cut);
std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b, Rng& rng);

/// With probability `rate`, redraws the gene of one uniformly chosen act.
/// Returns whether a mutation was triggered.
bool mutate_in_place(Individual& child, const SearchSpace& space, double rate, Rng& rng);
Individual mutate(Individual child, const SearchSpace& space, double rate, Rng& rng);

/// Breeds population - 1 children (tournament, crossover, mutation) and
/// appends a copy of the fittest current individual.
std::vector<Individual> next_generation(std::span<const Individual> population, std::span<const double> fitnesses,
                                        const SearchSpace& space, const GAConfig& config, Rng& rng);

/// Fitness of every individual, OpenMP-parallel over the population.
std::vector<double> evaluate_population(std::span<const Individual> population, const SearchSpace& space,
                                        const ScheduleRequest& request,
                                        std::span<const IncompatibilityRule> rules);

/// Single-threaded reference for evaluate_population.
std::vector<double> evaluate_population_serial(std::span<const Individual> population,
                                               const SearchSpace& space, const ScheduleRequest& request,
                                               std::span<const IncompatibilityRule> rules);

double evaluate_individual(const Individual& individual, const SearchSpace& space,
                           const ScheduleRequest& request, std::span<const IncompatibilityRule> rules);

/// Runs the generation loop. Throws UnschedulableError when every block is
/// empty.
EvolutionResult evolve(const SearchSpace& space, const ScheduleRequest& request,
                       std::span<const IncompatibilityRule> rules, const GAConfig& config);

}  // namespace medsched
