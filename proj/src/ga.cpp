#include "medsched/ga.hpp"

#include <algorithm>
#include <numeric>

namespace medsched {

namespace {

constexpr std::uint64_t kEvolveStream = 11;

std::int32_t draw_position(std::size_t lo, std::size_t size, Rng& rng) {
    std::uniform_int_distribution<std::size_t> dist(lo, size - 1);
    return static_cast<std::int32_t>(dist(rng));
}

}  // namespace

std::string_view to_string(InitVariant v) {
    return v == InitVariant::Ordered ? "ordered" : "unordered";
}

InitVariant parse_init_variant(std::string_view text) {
    if (text == "ordered") return InitVariant::Ordered;
    if (text == "unordered") return InitVariant::Unordered;
    throw Error("unknown GA variant: " + std::string(text));
}

void GAConfig::validate() const {
    if (population < 1) throw Error("population must be >= 1");
    if (generations < 0) throw Error("generations must be >= 0");
    if (tournament_k < 1 || tournament_k > population) throw Error("tournament_k must be in [1, population]");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) throw Error("mutation_rate must be in [0, 1]");
}

bool SearchSpace::all_empty() const {
    return std::all_of(per_act_slots.begin(), per_act_slots.end(), [](const auto& b) { return b.empty(); });
}

std::size_t SearchSpace::bit_length() const {
    std::size_t n = 0;
    for (const auto& block : per_act_slots) n += block.size();
    return n;
}

SearchSpace filter_search_space(std::span<const TimeSlot> slots, const ScheduleRequest& request) {
    SearchSpace space;
    space.per_act_slots.resize(request.acts.size());
    const Minutes earliest = at(request.start_date, 0);
    for (std::size_t act = 0; act < request.acts.size(); ++act) {
        auto& block = space.per_act_slots[act];
        for (const auto& slot : slots) {
            if (slot.exam != request.acts[act] || slot.start < earliest) continue;
            if (request.preferred_facilities && !request.preferred_facilities->contains(slot.facility)) continue;
            if (request.preferred_practitioners && !request.preferred_practitioners->contains(slot.practitioner))
                continue;
            block.push_back(slot);
        }
        std::sort(block.begin(), block.end(), [](const TimeSlot& a, const TimeSlot& b) {
            return a.start != b.start ? a.start < b.start : a.id < b.id;
        });
    }
    return space;
}

void check_individual(const Individual& individual, const SearchSpace& space) {
    if (individual.genes.size() != space.act_count())
        throw Error("individual has " + std::to_string(individual.genes.size()) + " genes for " +
                    std::to_string(space.act_count()) + " acts");
    for (std::size_t act = 0; act < individual.genes.size(); ++act) {
        const auto gene = individual.genes[act];
        const auto size = space.per_act_slots[act].size();
        if (gene == kUnassigned) continue;
        if (gene < 0 || static_cast<std::size_t>(gene) >= size)
            throw Error("gene " + std::to_string(gene) + " out of range for act " + std::to_string(act));
    }
}

std::vector<std::uint8_t> to_one_hot(const Individual& individual, const SearchSpace& space) {
    check_individual(individual, space);
    std::vector<std::uint8_t> bits;
    bits.reserve(space.bit_length());
    for (std::size_t act = 0; act < space.act_count(); ++act) {
        const auto size = space.per_act_slots[act].size();
        for (std::size_t pos = 0; pos < size; ++pos)
            bits.push_back(static_cast<std::int32_t>(pos) == individual.genes[act] ? 1 : 0);
    }
    return bits;
}

Individual from_one_hot(std::span<const std::uint8_t> bits, const SearchSpace& space) {
    if (bits.size() != space.bit_length()) throw Error("bit string length does not match search space");
    Individual individual;
    std::size_t offset = 0;
    for (const auto& block : space.per_act_slots) {
        std::int32_t selected = kUnassigned;
        std::size_t ones = 0;
        for (std::size_t pos = 0; pos < block.size(); ++pos) {
            if (bits[offset + pos] == 0) continue;
            ++ones;
            selected = static_cast<std::int32_t>(pos);
        }
        if (!block.empty() && ones != 1) throw Error("block is not one-hot");
        individual.genes.push_back(selected);
        offset += block.size();
    }
    return individual;
}

Individual sample_unordered(const SearchSpace& space, Rng& rng) {
    Individual individual;
    individual.genes.reserve(space.act_count());
    for (const auto& block : space.per_act_slots)
        individual.genes.push_back(block.empty() ? kUnassigned : draw_position(0, block.size(), rng));
    return individual;
}

Individual sample_ordered(const SearchSpace& space, std::span<const std::size_t> order, Rng& rng) {
    Individual individual;
    individual.genes.assign(space.act_count(), kUnassigned);
    std::optional<Minutes> previous_end;
    for (const auto act : order) {
        const auto& block = space.per_act_slots[act];
        if (block.empty()) continue;
        std::size_t lo = 0;
        if (previous_end) {
            const auto it = std::lower_bound(block.begin(), block.end(), *previous_end,
                                             [](const TimeSlot& s, Minutes t) { return s.start < t; });
            lo = it == block.end() ? 0 : static_cast<std::size_t>(it - block.begin());
        }
        const auto gene = draw_position(lo, block.size(), rng);
        individual.genes[act] = gene;
        previous_end = block[static_cast<std::size_t>(gene)].end();
    }
    return individual;
}

std::vector<Individual> init_population(const SearchSpace& space, const GAConfig& config,
                                        std::span<const std::size_t> order, Rng& rng) {
    config.validate();
    if (config.variant == InitVariant::Ordered && order.size() != space.act_count())
        throw Error("ordered initialization needs an order covering every act");
    std::vector<Individual> population;
    population.reserve(static_cast<std::size_t>(config.population));
    for (std::int32_t i = 0; i < config.population; ++i) {
        population.push_back(config.variant == InitVariant::Ordered ? sample_ordered(space, order, rng)
                                                                    : sample_unordered(space, rng));
    }
    return population;
}

Schedule decode(const Individual& individual, const SearchSpace& space) {
    check_individual(individual, space);
    Schedule schedule;
    schedule.assignments.reserve(space.act_count());
    for (std::size_t act = 0; act < individual.genes.size(); ++act) {
        const auto gene = individual.genes[act];
        if (gene == kUnassigned) continue;
        schedule.assignments.push_back({act, space.per_act_slots[act][static_cast<std::size_t>(gene)]});
    }
    return schedule;
}

std::size_t tournament_index(std::span<const double> fitnesses, std::int32_t k, Rng& rng) {
    if (fitnesses.empty()) throw Error("tournament over an empty population");
    std::uniform_int_distribution<std::size_t> dist(0, fitnesses.size() - 1);
    std::size_t best = dist(rng);
    for (std::int32_t i = 1; i < k; ++i) {
        const std::size_t c = dist(rng);
        if (fitnesses[c] > fitnesses[best] || (fitnesses[c] == fitnesses[best] && c < best)) best = c;
    }
    return best;
}

const Individual& tournament_select(std::span<const Individual> population, std::span<const double> fitnesses,
                                    std::int32_t k, Rng& rng) {
    if (population.size() != fitnesses.size()) throw Error("population and fitness sizes differ");
    return population[tournament_index(fitnesses, k, rng)];
}

std::pair<Individual, Individual> crossover_at(const Individual& a, const Individual& b, std::size_t cut) {
    if (a.genes.size() != b.genes.size()) throw Error("crossover parents differ in length");
    if (cut > a.genes.size()) throw Error("crossover cut out of range");
    Individual child_a = a;
    Individual child_b = b;
    std::swap_ranges(child_a.genes.begin() + static_cast<std::ptrdiff_t>(cut), child_a.genes.end(),
                     child_b.genes.begin() + static_cast<std::ptrdiff_t>(cut));
    return {std::move(child_a), std::move(child_b)};
}

std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b, Rng& rng) {
    if (a.genes.size() != b.genes.size()) throw Error("crossover parents differ in length");
    if (a.genes.size() < 2) return {a, b};
    std::uniform_int_distribution<std::size_t> dist(1, a.genes.size() - 1);
    return crossover_at(a, b, dist(rng));
}

bool mutate_in_place(Individual& child, const SearchSpace& space, double rate, Rng& rng) {
    if (child.genes.empty()) return false;
    std::bernoulli_distribution trigger(rate);
    if (!trigger(rng)) return false;
    std::uniform_int_distribution<std::size_t> act_dist(0, child.genes.size() - 1);
    const auto act = act_dist(rng);
    const auto& block = space.per_act_slots[act];
    if (!block.empty()) child.genes[act] = draw_position(0, block.size(), rng);
    return true;
}

Individual mutate(Individual child, const SearchSpace& space, double rate, Rng& rng) {
    mutate_in_place(child, space, rate, rng);
    return child;
}

std::vector<Individual> next_generation(std::span<const Individual> population, std::span<const double> fitnesses,
                                        const SearchSpace& space, const GAConfig& config, Rng& rng) {
    if (population.empty() || population.size() != fitnesses.size())
        throw Error("next_generation needs one fitness per individual");
    const auto size = population.size();
    std::vector<Individual> next;
    next.reserve(size);
    while (next.size() + 1 < size) {
        const auto& pa = tournament_select(population, fitnesses, config.tournament_k, rng);
        const auto& pb = tournament_select(population, fitnesses, config.tournament_k, rng);
        auto [ca, cb] = crossover(pa, pb, rng);
        mutate_in_place(ca, space, config.mutation_rate, rng);
        mutate_in_place(cb, space, config.mutation_rate, rng);
        next.push_back(std::move(ca));
        if (next.size() + 1 < size) next.push_back(std::move(cb));
    }
    const auto best = std::max_element(fitnesses.begin(), fitnesses.end()) - fitnesses.begin();
    next.push_back(population[static_cast<std::size_t>(best)]);
    return next;
}

EvolutionResult evolve(const SearchSpace& space, const ScheduleRequest& request,
                       std::span<const IncompatibilityRule> rules, const GAConfig& config) {
    config.validate();
    if (space.act_count() != request.acts.size()) throw Error("search space does not match request");
    if (space.all_empty()) throw UnschedulableError("unschedulable request: no act has a candidate slot");

    Rng rng = make_rng(config.seed, kEvolveStream);
    std::vector<std::size_t> order(space.act_count());
    std::iota(order.begin(), order.end(), 0);
    if (config.variant == InitVariant::Ordered) order = optimal_act_order(request.acts, rules).order;

    auto population = init_population(space, config, order, rng);
    const auto pop_size = static_cast<std::size_t>(config.population);

    EvolutionResult result;
    result.history.reserve(static_cast<std::size_t>(config.generations));

    auto scores = evaluate_population(population, space, request, rules);
    for (std::int32_t g = 0;; ++g) {
        const auto best_it = std::max_element(scores.begin(), scores.end());
        const auto best = static_cast<std::size_t>(best_it - scores.begin());
        if (result.best_individual.genes.empty() || *best_it > result.best_fitness) {
            result.best_fitness = *best_it;
            result.best_individual = population[best];
        }
        if (g >= config.generations) break;

        const double mean = std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(pop_size);
        result.history.push_back({g, *best_it, mean, population[best]});
        if (g + 1 == config.generations) break;

        population = next_generation(population, scores, space, config, rng);
        scores = evaluate_population(population, space, request, rules);
    }

    result.best = decode(result.best_individual, space);
    return result;
}

}  // namespace medsched
