#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "medsched/bench.hpp"
#include "medsched/io.hpp"
#include "support.hpp"

using namespace medsched;
using namespace medsched::test;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::string> out;
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

fs::path scratch_dir(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("medsched_test_" + name);
    fs::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("instant format") {
    CHECK(format_instant(at(3, hm(9))) == "3T540");
    CHECK(parse_instant("3T540") == at(3, hm(9)));
    CHECK(parse_instant("0T1259") == hm(20, 59));
    CHECK_THROWS_AS(parse_instant("540"), IoError);
    CHECK_THROWS_AS(parse_instant("xT1"), IoError);
}

TEST_CASE("property: world documents round-trip") {
    Rng rng = make_rng(801, 0);
    std::uniform_int_distribution<int> days(1, 4), fac(1, 4), rules(0, 20);
    for (int i = 0; i < 20; ++i) {
        WorldConfig c;
        c.seed = rng();
        c.horizon_days = days(rng);
        c.facilities = fac(rng);
        c.rule_count = rules(rng);
        const auto world = generate_world(c);
        const auto text = to_json(world).dump();
        const auto back = world_from_json(nlohmann::json::parse(text));
        REQUIRE(back.slots == world.slots);
        REQUIRE(back.rules == world.rules);
        REQUIRE(back.catalog.size() == world.catalog.size());
        REQUIRE(back.facilities.size() == world.facilities.size());
        REQUIRE(back.config.seed == c.seed);
        REQUIRE(to_json(back).dump() == text);
    }
}

TEST_CASE("world document shape") {
    WorldConfig c;
    c.seed = 42;
    const auto j = to_json(generate_world(c));
    for (const char* key : {"exams", "rules", "facilities", "slots"}) CHECK(j.contains(key));
    CHECK(j["exams"].size() == 50);
    CHECK(j["rules"].size() == 15);
    const auto& s = j["slots"][0];
    CHECK(s["start"] == "0T540");
    CHECK(s["start_minute"] == 540);
}

TEST_CASE("request documents") {
    ScheduleRequest r;
    r.acts = {ExamId{4}, ExamId{9}};
    r.start_date = 2;
    r.preferred_facilities = std::set<FacilityId>{FacilityId{1}};
    const auto back = request_from_json(to_json(r));
    CHECK(back.acts == r.acts);
    CHECK(back.start_date == 2);
    CHECK(back.preferred_facilities == r.preferred_facilities);
    CHECK_FALSE(back.preferred_practitioners.has_value());

    CHECK_THROWS_AS(request_from_json(nlohmann::json{{"acts", nlohmann::json::array()}}), Error);
    CHECK_THROWS_AS(request_from_json(nlohmann::json{{"start_date", 1}}), IoError);
    CHECK_THROWS_AS(world_from_json(nlohmann::json{{"exams", 1}}), IoError);
    CHECK_THROWS_AS(load_world("/nonexistent/world.json"), IoError);
}

TEST_CASE("solve_request") {
    WorldConfig c;
    c.seed = 3;
    const auto world = generate_world(c);
    const auto request = generate_request(world.catalog, 1, 3);
    GAConfig ga;
    ga.generations = 20;
    const auto out = solve_request(world, request, Algorithm::GaUnordered, ga, 5);
    CHECK(out.history.size() == 20);
    CHECK(out.fitness == doctest::Approx(1.0 / (1.0 + out.penalties.total())));
    CHECK(solve_request(world, request, Algorithm::Fcfs, ga, 5).history.empty());

    ga.generations = 0;
    CHECK(solve_request(world, request, Algorithm::GaOrdered, ga, 5).schedule.size() == 3);

    ScheduleRequest late = request;
    late.start_date = 30;
    CHECK_THROWS_AS(solve_request(world, late, Algorithm::Random, ga, 5), UnschedulableError);

    CHECK(parse_algorithm("ga-ordered") == Algorithm::GaOrdered);
    CHECK_THROWS_AS(parse_algorithm("tabu"), Error);
}

TEST_CASE("bench CSVs: single trial is well-formed") {
    WorldConfig c;
    c.seed = 11;
    const auto world = generate_world(c);
    BenchConfig config;
    config.trials = 1;
    config.ga.generations = 15;
    config.seed = 4;
    const auto result = run_bench(world, config);
    const auto dir = scratch_dir("single");
    write_bench_csvs(result, dir);

    const auto conv = lines(dir / "convergence.csv");
    CHECK(conv.front() == "algorithm,generation,mean_fitness,best_fitness");
    CHECK(conv.size() == 1 + 4 * 15);
    CHECK(lines(dir / "itr.csv").size() == 1 + 4);
    CHECK(lines(dir / "trips.csv").size() == 1 + 4);
    CHECK(lines(dir / "fulfillment.csv").size() == 1 + 4 * 4);
    CHECK(lines(dir / "trials.csv").size() == 1 + 4);
    CHECK(lines(dir / "stats.csv").size() == 1 + 2 * 6);
    for (const char* f : {"convergence.csv", "itr.csv", "trips.csv", "fulfillment.csv", "stats.csv", "trials.csv"})
        CHECK(slurp(dir / f).find('\r') == std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("bench is reproducible and history is monotone per trial") {
    WorldConfig c;
    c.seed = 12;
    const auto world = generate_world(c);
    BenchConfig config;
    config.trials = 3;
    config.ga.generations = 25;
    config.seed = 8;
    const auto a = run_bench(world, config);
    const auto b = run_bench(world, config);
    const auto da = scratch_dir("repro_a"), db = scratch_dir("repro_b");
    write_bench_csvs(a, da);
    write_bench_csvs(b, db);
    for (const char* f : {"convergence.csv", "itr.csv", "trips.csv", "fulfillment.csv", "stats.csv", "trials.csv"})
        CHECK(slurp(da / f) == slurp(db / f));

    for (auto alg : {Algorithm::GaOrdered, Algorithm::GaUnordered}) {
        for (const auto* o : a.for_algorithm(alg)) {
            REQUIRE(o->ok);
            REQUIRE(o->outcome.history.size() == 25);
            for (std::size_t g = 1; g < 25; ++g)
                CHECK(o->outcome.history[g].best_fitness >= o->outcome.history[g - 1].best_fitness);
        }
    }

    const auto itr = read_metric_csv(da / "itr.csv");
    CHECK(itr.size() == 4);
    CHECK(itr.at(Algorithm::Fcfs).size() == 3);
    std::ostringstream stats;
    write_stats_csv(pairwise_stats("itr", itr), stats);
    CHECK(slurp(da / "stats.csv").rfind(stats.str(), 0) == 0);
    fs::remove_all(da);
    fs::remove_all(db);
}

TEST_CASE("bench records per-trial failures and keeps going") {
    WorldConfig c;
    c.seed = 13;
    c.horizon_days = 1;
    c.facilities = 1;
    c.rooms_per_facility = 1;
    const auto world = generate_world(c);  // about ten slots for fifty exams
    BenchConfig config;
    config.trials = 6;
    config.acts_per_request = 1;
    config.ga.generations = 3;
    config.algorithms = {Algorithm::Fcfs, Algorithm::GaUnordered};
    const auto result = run_bench(world, config);
    std::size_t failed = 0;
    for (const auto& o : result.outcomes) {
        if (!o.ok) {
            ++failed;
            CHECK(o.error.find("unschedulable") != std::string::npos);
        }
    }
    CHECK(failed > 0);
    const auto dir = scratch_dir("failures");
    CHECK_NOTHROW(write_bench_csvs(result, dir));
    fs::remove_all(dir);

    config.algorithms.clear();
    CHECK_THROWS_AS(run_bench(world, config), Error);
}

TEST_CASE("documented example world matches the generator") {
    const auto doc = read_json(fs::path(MEDSCHED_SOURCE_DIR) / "docs" / "world-example.json");
    WorldConfig c;
    c.seed = 42;
    c.horizon_days = 1;
    c.facilities = 1;
    c.rule_count = 3;
    CHECK(doc == to_json(generate_world(c)));
    CHECK(load_world(fs::path(MEDSCHED_SOURCE_DIR) / "docs" / "world-example.json").slots.size() == 48);
}
