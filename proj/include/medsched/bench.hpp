#pragma once

// Batch comparison of the GA variants against the FCFS and Random baselines
// on one shared world, plus the CSV reports built from it.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "medsched/datagen.hpp"
#include "medsched/fitness.hpp"
#include "medsched/ga.hpp"
#include "medsched/metrics.hpp"

namespace medsched {

enum class Algorithm { GaOrdered, GaUnordered, Fcfs, Random };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::GaOrdered, Algorithm::GaUnordered, Algorithm::Fcfs,
                                               Algorithm::Random};

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view text);
bool is_ga(Algorithm a);

struct SolveOutcome {
    Algorithm algorithm = Algorithm::Fcfs;
    Schedule schedule;
    PenaltyBreakdown penalties;
    double fitness = 0.0;
    SolutionMetrics metrics;
    std::vector<GenerationStats> history;  // GA only
};

/// Runs one algorithm on one request. `seed` drives the GA or the random
/// baseline; ga.variant is overridden by the algorithm. Throws
/// UnschedulableError when no act has a candidate.
SolveOutcome solve_request(const World& world, const ScheduleRequest& request, Algorithm algorithm,
                           const GAConfig& ga, std::uint64_t seed);

struct BenchConfig {
    std::int32_t trials = 25;
    std::int32_t acts_per_request = 5;
    std::vector<Algorithm> algorithms{std::begin(kAllAlgorithms), std::end(kAllAlgorithms)};
    GAConfig ga;
    std::uint64_t seed = 0;

    void validate() const;
};

struct TrialOutcome {
    std::int32_t trial = 0;
    Algorithm algorithm = Algorithm::Fcfs;
    bool ok = false;
    std::string error;
    SolveOutcome outcome;
};

struct BenchResult {
    BenchConfig config;
    std::vector<ScheduleRequest> requests;  // one per trial
    std::vector<TrialOutcome> outcomes;     // trial-major, algorithms in config order

    [[nodiscard]] std::vector<const TrialOutcome*> for_algorithm(Algorithm a) const;
};

/// Seeds used by trial `trial`: the request seed, and the solver seed shared
/// by both GA variants (paired comparison).
std::uint64_t trial_request_seed(const BenchConfig& config, std::int32_t trial);
std::uint64_t trial_solver_seed(const BenchConfig& config, std::int32_t trial, Algorithm algorithm);

/// Trials run concurrently; per-trial failures are recorded, not thrown.
BenchResult run_bench(const World& world, const BenchConfig& config);

struct StatRow {
    std::string metric;
    Algorithm a = Algorithm::GaOrdered;
    Algorithm b = Algorithm::GaOrdered;
    std::size_t n_a = 0;
    std::size_t n_b = 0;
    double median_a = 0.0;
    double median_b = 0.0;
    MannWhitneyResult test;
};

using MetricSamples = std::map<Algorithm, std::vector<double>>;

MetricSamples itr_samples(const BenchResult& result);
MetricSamples trip_samples(const BenchResult& result);

/// Mann-Whitney U for every unordered algorithm pair with data on both sides.
std::vector<StatRow> pairwise_stats(const std::string& metric, const MetricSamples& samples);

/// Writes convergence.csv, fulfillment.csv, itr.csv, trips.csv, stats.csv and
/// trials.csv into `dir`.
void write_bench_csvs(const BenchResult& result, const std::filesystem::path& dir);

void write_stats_csv(const std::vector<StatRow>& rows, std::ostream& out);

/// Reads a long-format metric CSV (trial,algorithm,<value>); empty values are skipped.
MetricSamples read_metric_csv(const std::filesystem::path& path);

std::string format_double(double v);

}  // namespace medsched
