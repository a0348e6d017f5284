// medsched: generate synthetic worlds, solve single requests and run the
// GA-vs-baseline benchmark.
//
// Exit codes: 0 success, 1 usage error, 2 unschedulable request or I/O failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "medsched/bench.hpp"
#include "medsched/io.hpp"

namespace fs = std::filesystem;
using namespace medsched;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

struct GaFlags {
    std::int32_t generations = 200;
    std::int32_t population = 100;
    std::int32_t tournament_k = 7;
    double mutation_rate = 0.10;

    void attach(CLI::App& cmd) {
        cmd.add_option("--generations", generations, "GA generations")->capture_default_str();
        cmd.add_option("--population", population, "GA population size")->capture_default_str();
        cmd.add_option("--tournament-k", tournament_k, "tournament size")->capture_default_str();
        cmd.add_option("--mutation-rate", mutation_rate, "fraction of children mutated")->capture_default_str();
    }

    [[nodiscard]] GAConfig config() const {
        GAConfig c;
        c.generations = generations;
        c.population = population;
        c.tournament_k = tournament_k;
        c.mutation_rate = mutation_rate;
        return c;
    }
};

void write_history_csv(const fs::path& path, const std::vector<GenerationStats>& history) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << "generation,best_fitness,mean_fitness\n";
    for (const auto& h : history)
        out << h.generation << ',' << format_double(h.best_fitness) << ',' << format_double(h.mean_fitness) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-appointment medical scheduling: genetic algorithm and baselines"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    const auto add_seed = [&](CLI::App& cmd) {
        cmd.add_option("--seed", seed, "random seed")->envname("MEDSCHED_SEED")->capture_default_str();
    };

    // gen-world
    auto* gen = app.add_subcommand("gen-world", "generate a synthetic world (world.json)");
    WorldConfig world_config;
    fs::path out_dir = ".";
    add_seed(*gen);
    gen->add_option("--out", out_dir, "output directory")->capture_default_str();
    gen->add_option("--rule-count", world_config.rule_count, "incompatibility rules")->capture_default_str();
    gen->add_option("--horizon-days", world_config.horizon_days, "days in the planning horizon")
        ->capture_default_str();
    gen->add_option("--facilities", world_config.facilities, "number of facilities")->capture_default_str();

    // solve
    auto* solve = app.add_subcommand("solve", "solve one request with one algorithm");
    fs::path world_path = "world.json";
    fs::path request_path;
    std::string algo = "ga-ordered";
    std::string variant = "unordered";
    std::int32_t acts = 5;
    std::int32_t start_day = 0;
    std::vector<std::int32_t> prefer_facility;
    std::vector<std::int32_t> prefer_practitioner;
    GaFlags solve_ga;
    add_seed(*solve);
    solve->add_option("--world", world_path, "world.json or its directory")->capture_default_str();
    solve->add_option("--request", request_path, "request.json (overrides --acts/--start-day/--prefer-*)");
    solve->add_option("--algo", algo, "ga, ga-ordered, ga-unordered, fcfs or random")->capture_default_str();
    solve->add_option("--variant", variant, "initialization for --algo ga: ordered or unordered")
        ->capture_default_str();
    solve->add_option("--acts", acts, "acts in the sampled request")->capture_default_str();
    solve->add_option("--start-day", start_day, "first day of the search")->capture_default_str();
    solve->add_option("--prefer-facility", prefer_facility, "restrict to facility id (repeatable)");
    solve->add_option("--prefer-practitioner", prefer_practitioner, "restrict to practitioner id (repeatable)");
    solve->add_option("--out", out_dir, "output directory")->capture_default_str();
    solve_ga.attach(*solve);

    // bench
    auto* bench = app.add_subcommand("bench", "run the GA-vs-baselines benchmark");
    BenchConfig bench_config;
    std::vector<std::string> bench_algos;
    GaFlags bench_ga;
    add_seed(*bench);
    bench->add_option("--world", world_path, "world.json or its directory")->capture_default_str();
    bench->add_option("--trials", bench_config.trials, "independent requests")->capture_default_str();
    bench->add_option("--acts", bench_config.acts_per_request, "acts per request")->capture_default_str();
    bench->add_option("--algo", bench_algos, "algorithms to run (repeatable; default all)");
    bench->add_option("--out", out_dir, "output directory")->capture_default_str();
    bench_ga.attach(*bench);

    // stats
    auto* stats = app.add_subcommand("stats", "Mann-Whitney comparisons from a bench directory");
    fs::path stats_in = ".";
    std::optional<fs::path> stats_out;
    stats->add_option("--in", stats_in, "directory holding itr.csv and trips.csv")->capture_default_str();
    stats->add_option("--out", stats_out, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen) {
            world_config.seed = seed;
            const auto world = generate_world(world_config);
            write_json(out_dir / "world.json", to_json(world));
            std::cout << "wrote " << (out_dir / "world.json").string() << ": " << world.catalog.size() << " exams, "
                      << world.rules.size() << " rules, " << world.slots.size() << " slots\n";
        } else if (*solve) {
            const auto world = load_world(world_path);
            ScheduleRequest request;
            if (!request_path.empty()) {
                request = load_request(request_path);
            } else {
                request = generate_request(world.catalog, seed, acts);
                request.start_date = start_day;
                if (!prefer_facility.empty()) {
                    request.preferred_facilities.emplace();
                    for (auto f : prefer_facility) request.preferred_facilities->insert(FacilityId{f});
                }
                if (!prefer_practitioner.empty()) {
                    request.preferred_practitioners.emplace();
                    for (auto p : prefer_practitioner) request.preferred_practitioners->insert(PractitionerId{p});
                }
            }
            const Algorithm algorithm =
                algo == "ga" ? (parse_init_variant(variant) == InitVariant::Ordered ? Algorithm::GaOrdered
                                                                                     : Algorithm::GaUnordered)
                             : parse_algorithm(algo);

            const auto outcome = solve_request(world, request, algorithm, solve_ga.config(), derive_seed(seed, 1));
            write_json(out_dir / "request.json", to_json(request));
            nlohmann::json solution{{"algorithm", to_string(algorithm)},
                                    {"assignments", to_json(outcome.schedule)},
                                    {"penalties", to_json(outcome.penalties)},
                                    {"fitness", outcome.fitness},
                                    {"metrics", to_json(outcome.metrics)}};
            write_json(out_dir / "solution.json", solution);
            if (is_ga(algorithm)) write_history_csv(out_dir / "convergence.csv", outcome.history);

            const auto& f = outcome.metrics.flags;
            std::cout << to_string(algorithm) << ": fitness " << format_double(outcome.fitness) << ", penalty "
                      << format_double(outcome.penalties.total()) << ", trips " << outcome.metrics.trips
                      << ", overlap_ok " << f.overlap_ok << ", compatibility_ok " << f.compatibility_ok
                      << ", travel_ok " << f.travel_ok << '\n';
        } else if (*bench) {
            const auto world = load_world(world_path);
            bench_config.seed = seed;
            bench_config.ga = bench_ga.config();
            if (!bench_algos.empty()) {
                bench_config.algorithms.clear();
                for (const auto& a : bench_algos) bench_config.algorithms.push_back(parse_algorithm(a));
            }
            const auto result = run_bench(world, bench_config);
            write_bench_csvs(result, out_dir);
            std::size_t failures = 0;
            for (const auto& o : result.outcomes) {
                if (o.ok) continue;
                ++failures;
                std::cerr << "trial " << o.trial << " " << to_string(o.algorithm) << ": " << o.error << '\n';
            }
            std::cout << "bench: " << result.outcomes.size() << " runs, " << failures << " failed; CSVs in "
                      << out_dir.string() << '\n';
        } else if (*stats) {
            auto rows = pairwise_stats("itr", read_metric_csv(stats_in / "itr.csv"));
            const auto trips = pairwise_stats("trips", read_metric_csv(stats_in / "trips.csv"));
            rows.insert(rows.end(), trips.begin(), trips.end());
            if (stats_out) {
                std::ofstream out(*stats_out, std::ios::binary);
                if (!out) throw IoError("cannot write " + stats_out->string());
                write_stats_csv(rows, out);
            } else {
                write_stats_csv(rows, std::cout);
            }
        }
    } catch (const UnschedulableError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
