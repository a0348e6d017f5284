#include "medsched/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "medsched/baselines.hpp"
#include "medsched/io.hpp"

namespace medsched {

std::string_view to_string(Algorithm a) {
    switch (a) {
    case Algorithm::GaOrdered: return "ga-ordered";
    case Algorithm::GaUnordered: return "ga-unordered";
    case Algorithm::Fcfs: return "fcfs";
    case Algorithm::Random: return "random";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view text) {
    for (auto a : kAllAlgorithms)
        if (to_string(a) == text) return a;
    throw Error("unknown algorithm: " + std::string(text));
}

bool is_ga(Algorithm a) {
    return a == Algorithm::GaOrdered || a == Algorithm::GaUnordered;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

SolveOutcome solve_request(const World& world, const ScheduleRequest& request, Algorithm algorithm,
                           const GAConfig& ga, std::uint64_t seed) {
    request.validate();
    const auto space = filter_search_space(world.slots, request);
    if (space.all_empty()) throw UnschedulableError("unschedulable request: no act has a candidate slot");

    SolveOutcome out;
    out.algorithm = algorithm;
    switch (algorithm) {
    case Algorithm::GaOrdered:
    case Algorithm::GaUnordered: {
        GAConfig config = ga;
        config.seed = seed;
        config.variant = algorithm == Algorithm::GaOrdered ? InitVariant::Ordered : InitVariant::Unordered;
        auto evolved = evolve(space, request, world.rules, config);
        out.schedule = std::move(evolved.best);
        out.history = std::move(evolved.history);
        break;
    }
    case Algorithm::Fcfs:
        out.schedule = fcfs_schedule(space, request);
        break;
    case Algorithm::Random: {
        Rng rng = make_rng(seed, 21);
        out.schedule = random_schedule(space, request, rng);
        break;
    }
    }
    out.penalties = compute_penalties(out.schedule, request, world.rules);
    out.fitness = fitness(out.penalties).score;
    out.metrics = compute_metrics(out.schedule, world.rules, request.acts.size());
    return out;
}

void BenchConfig::validate() const {
    if (trials < 1) throw Error("trials must be >= 1");
    if (acts_per_request < 1) throw Error("acts_per_request must be >= 1");
    if (algorithms.empty()) throw Error("no algorithms selected");
    ga.validate();
}

std::vector<const TrialOutcome*> BenchResult::for_algorithm(Algorithm a) const {
    std::vector<const TrialOutcome*> out;
    for (const auto& o : outcomes)
        if (o.algorithm == a) out.push_back(&o);
    return out;
}

std::uint64_t trial_request_seed(const BenchConfig& config, std::int32_t trial) {
    return derive_seed(config.seed, static_cast<std::uint64_t>(trial));
}

std::uint64_t trial_solver_seed(const BenchConfig& config, std::int32_t trial, Algorithm algorithm) {
    // Both GA variants share a seed so their runs pair up.
    const std::uint64_t stream = is_ga(algorithm) ? 100 : 100 + static_cast<std::uint64_t>(algorithm);
    return derive_seed(trial_request_seed(config, trial), stream);
}

BenchResult run_bench(const World& world, const BenchConfig& config) {
    config.validate();
    BenchResult result;
    result.config = config;
    const auto n_algos = config.algorithms.size();
    const auto n_trials = static_cast<std::size_t>(config.trials);

    for (std::int32_t t = 0; t < config.trials; ++t)
        result.requests.push_back(
            generate_request(world.catalog, trial_request_seed(config, t), config.acts_per_request));

    result.outcomes.resize(n_trials * n_algos);
    const auto jobs = static_cast<std::int64_t>(result.outcomes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t job = 0; job < jobs; ++job) {
        const auto trial = static_cast<std::int32_t>(static_cast<std::size_t>(job) / n_algos);
        const auto algorithm = config.algorithms[static_cast<std::size_t>(job) % n_algos];
        auto& slot = result.outcomes[static_cast<std::size_t>(job)];
        slot.trial = trial;
        slot.algorithm = algorithm;
        try {
            slot.outcome = solve_request(world, result.requests[static_cast<std::size_t>(trial)], algorithm,
                                         config.ga, trial_solver_seed(config, trial, algorithm));
            slot.ok = true;
        } catch (const std::exception& e) {
            slot.error = e.what();
        }
    }
    return result;
}

MetricSamples itr_samples(const BenchResult& result) {
    MetricSamples samples;
    for (auto a : result.config.algorithms) {
        auto& v = samples[a];
        for (const auto* o : result.for_algorithm(a))
            if (o->ok && o->outcome.metrics.itr) v.push_back(*o->outcome.metrics.itr);
    }
    return samples;
}

MetricSamples trip_samples(const BenchResult& result) {
    MetricSamples samples;
    for (auto a : result.config.algorithms) {
        auto& v = samples[a];
        for (const auto* o : result.for_algorithm(a))
            if (o->ok) v.push_back(static_cast<double>(o->outcome.metrics.trips));
    }
    return samples;
}

std::vector<StatRow> pairwise_stats(const std::string& metric, const MetricSamples& samples) {
    std::vector<StatRow> rows;
    for (auto ia = samples.begin(); ia != samples.end(); ++ia) {
        for (auto ib = std::next(ia); ib != samples.end(); ++ib) {
            if (ia->second.empty() || ib->second.empty()) continue;
            StatRow row;
            row.metric = metric;
            row.a = ia->first;
            row.b = ib->first;
            row.n_a = ia->second.size();
            row.n_b = ib->second.size();
            row.median_a = median(ia->second);
            row.median_b = median(ib->second);
            row.test = mann_whitney_u(ia->second, ib->second);
            rows.push_back(row);
        }
    }
    return rows;
}

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

const char* flag(bool b) { return b ? "1" : "0"; }

void write_convergence(const BenchResult& result, std::ostream& out) {
    out << "algorithm,generation,mean_fitness,best_fitness\n";
    const auto generations = static_cast<std::size_t>(result.config.ga.generations);
    for (auto a : result.config.algorithms) {
        const auto runs = result.for_algorithm(a);
        std::vector<double> mean(generations, 0.0);
        std::vector<double> best(generations, 0.0);
        std::size_t n = 0;
        for (const auto* o : runs) {
            if (!o->ok) continue;
            ++n;
            for (std::size_t g = 0; g < generations; ++g) {
                if (is_ga(a)) {
                    mean[g] += o->outcome.history.at(g).mean_fitness;
                    best[g] += o->outcome.history.at(g).best_fitness;
                } else {
                    mean[g] += o->outcome.fitness;
                    best[g] += o->outcome.fitness;
                }
            }
        }
        if (n == 0) continue;
        for (std::size_t g = 0; g < generations; ++g) {
            out << to_string(a) << ',' << g << ',' << format_double(mean[g] / static_cast<double>(n)) << ','
                << format_double(best[g] / static_cast<double>(n)) << '\n';
        }
    }
}

void write_fulfillment(const BenchResult& result, std::ostream& out) {
    out << "algorithm,constraint,fulfilled,trials,percent\n";
    for (auto a : result.config.algorithms) {
        std::size_t n = 0, overlap = 0, compat = 0, travel = 0, full = 0;
        for (const auto* o : result.for_algorithm(a)) {
            if (!o->ok) continue;
            ++n;
            const auto& f = o->outcome.metrics.flags;
            overlap += f.overlap_ok;
            compat += f.compatibility_ok;
            travel += f.travel_ok;
            full += f.fully_scheduled;
        }
        const auto row = [&](const char* name, std::size_t k) {
            const double pct = n == 0 ? 0.0 : 100.0 * static_cast<double>(k) / static_cast<double>(n);
            out << to_string(a) << ',' << name << ',' << k << ',' << n << ',' << format_double(pct) << '\n';
        };
        row("overlap", overlap);
        row("compatibility", compat);
        row("travel", travel);
        row("fully_scheduled", full);
    }
}

void write_trials(const BenchResult& result, std::ostream& out) {
    out << "trial,algorithm,status,fitness,penalty_total,itr,trips,overlap_ok,compatibility_ok,travel_ok,"
           "fully_scheduled\n";
    for (const auto& o : result.outcomes) {
        out << o.trial << ',' << to_string(o.algorithm) << ',';
        if (!o.ok) {
            out << "error,,,,,,,,\n";
            continue;
        }
        const auto& m = o.outcome.metrics;
        out << "ok," << format_double(o.outcome.fitness) << ',' << format_double(o.outcome.penalties.total())
            << ',' << (m.itr ? format_double(*m.itr) : "") << ',' << m.trips << ',' << flag(m.flags.overlap_ok)
            << ',' << flag(m.flags.compatibility_ok) << ',' << flag(m.flags.travel_ok) << ','
            << flag(m.flags.fully_scheduled) << '\n';
    }
}

}  // namespace

void write_stats_csv(const std::vector<StatRow>& rows, std::ostream& out) {
    out << "metric,algorithm_a,algorithm_b,n_a,n_b,median_a,median_b,u,p\n";
    for (const auto& r : rows) {
        out << r.metric << ',' << to_string(r.a) << ',' << to_string(r.b) << ',' << r.n_a << ',' << r.n_b << ','
            << format_double(r.median_a) << ',' << format_double(r.median_b) << ',' << format_double(r.test.u)
            << ',' << format_double(r.test.p) << '\n';
    }
}

void write_bench_csvs(const BenchResult& result, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    {
        auto out = open_csv(dir / "convergence.csv");
        write_convergence(result, out);
    }
    {
        auto out = open_csv(dir / "fulfillment.csv");
        write_fulfillment(result, out);
    }
    {
        auto out = open_csv(dir / "itr.csv");
        out << "trial,algorithm,itr\n";
        for (const auto& o : result.outcomes) {
            if (!o.ok) continue;
            const auto& itr = o.outcome.metrics.itr;
            out << o.trial << ',' << to_string(o.algorithm) << ',' << (itr ? format_double(*itr) : "") << '\n';
        }
    }
    {
        auto out = open_csv(dir / "trips.csv");
        out << "trial,algorithm,trips\n";
        for (const auto& o : result.outcomes)
            if (o.ok) out << o.trial << ',' << to_string(o.algorithm) << ',' << o.outcome.metrics.trips << '\n';
    }
    {
        auto rows = pairwise_stats("itr", itr_samples(result));
        const auto trips = pairwise_stats("trips", trip_samples(result));
        rows.insert(rows.end(), trips.begin(), trips.end());
        auto out = open_csv(dir / "stats.csv");
        write_stats_csv(rows, out);
    }
    {
        auto out = open_csv(dir / "trials.csv");
        write_trials(result, out);
    }
}

MetricSamples read_metric_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    MetricSamples samples;
    std::string line;
    if (!std::getline(in, line)) throw IoError(path.string() + ": missing header");
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string trial, algo, value;
        if (!std::getline(ss, trial, ',') || !std::getline(ss, algo, ','))
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": malformed row");
        std::getline(ss, value);
        auto& v = samples[parse_algorithm(algo)];
        if (value.empty()) continue;
        try {
            v.push_back(std::stod(value));
        } catch (const std::logic_error&) {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": bad value '" + value + "'");
        }
    }
    return samples;
}

}  // namespace medsched
