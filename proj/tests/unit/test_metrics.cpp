#include <doctest.h>

#include <algorithm>

#include "medsched/datagen.hpp"
#include "medsched/metrics.hpp"
#include "support.hpp"

using namespace medsched;
using namespace medsched::test;

TEST_CASE("idle_time_ratio") {
    CHECK(*idle_time_ratio(schedule_of({slot(0, 0, hm(9), 60), slot(1, 0, hm(10), 60)})) == 0.0);
    CHECK(*idle_time_ratio(schedule_of({slot(0, 0, hm(9), 60), slot(1, 0, hm(11), 60)})) ==
          doctest::Approx(60.0 / 180.0));
    CHECK_FALSE(idle_time_ratio(schedule_of({slot(0, 0, hm(9), 60)})).has_value());
    CHECK_FALSE(idle_time_ratio(Schedule{}).has_value());
    // Overlap contributes no idle time; span runs to the latest end.
    CHECK(*idle_time_ratio(schedule_of({slot(0, 0, hm(9), 90), slot(1, 0, hm(9, 30), 15)})) == 0.0);
}

TEST_CASE("trip_count") {
    CHECK(trip_count(schedule_of({slot(0, 0, hm(9), 30), slot(1, 0, hm(10), 30)})) == 1);
    CHECK(trip_count(schedule_of({slot(0, 0, hm(9), 30, 1), slot(1, 0, hm(10), 30, 2), slot(2, 0, hm(11), 30, 1)})) == 3);
    CHECK(trip_count(schedule_of({slot(0, 0, hm(9), 30), slot(1, 0, hm(13, 30), 30)})) == 2);
    CHECK_THROWS_AS(trip_count(Schedule{}), Error);
}

TEST_CASE("constraint_fulfillment") {
    const auto vacuous = constraint_fulfillment(Schedule{}, {}, 0);
    CHECK(vacuous.overlap_ok);
    CHECK(vacuous.compatibility_ok);
    CHECK(vacuous.travel_ok);
    CHECK(vacuous.fully_scheduled);

    const auto overlap = constraint_fulfillment(schedule_of({slot(0, 0, hm(9), 60), slot(1, 0, hm(9, 30), 60)}), {}, 2);
    CHECK_FALSE(overlap.overlap_ok);
    CHECK(overlap.compatibility_ok);
    CHECK(overlap.travel_ok);
    CHECK(overlap.fully_scheduled);

    const auto travel = constraint_fulfillment(schedule_of({slot(0, 0, hm(9), 60, 1), slot(1, 0, hm(12, 59), 30, 2)}), {}, 3);
    CHECK_FALSE(travel.travel_ok);
    CHECK_FALSE(travel.fully_scheduled);
}

TEST_CASE("mann_whitney_u examples") {
    const std::vector<double> a{1, 2, 3}, b{4, 5, 6};
    const auto r = mann_whitney_u(a, b);
    CHECK(r.u == 0.0);
    // scipy.stats.mannwhitneyu(method="asymptotic", use_continuity=True)
    CHECK(r.p == doctest::Approx(0.08085559837005224).epsilon(1e-9));

    const auto same = mann_whitney_u(a, a);
    CHECK(same.u == 4.5);
    CHECK(same.p == 1.0);

    const std::vector<double> t{1, 2};
    CHECK(mann_whitney_u(t, t).u == 2.0);

    const std::vector<double> x{0.1, 0.4, 0.4, 0.9, 1.3, 2.2, 2.2, 3.0}, y{0.4, 1.0, 1.7, 2.2, 3.5, 4.1, 5.0};
    const auto ties = mann_whitney_u(x, y);
    CHECK(ties.u == 15.0);
    CHECK(ties.p == doctest::Approx(0.14510568048514996).epsilon(1e-9));

    const std::vector<double> flat{2, 2, 2}, flat2{2, 2};
    CHECK(mann_whitney_u(flat, flat2).p == 1.0);
    CHECK_THROWS_AS(mann_whitney_u(std::vector<double>{}, a), Error);
}

TEST_CASE("median") {
    CHECK(median(std::vector<double>{3, 1, 2}) == 2.0);
    CHECK(median(std::vector<double>{4, 1, 2, 3}) == 2.5);
    CHECK_THROWS_AS(median(std::vector<double>{}), Error);
}

namespace {

// U by direct enumeration of all pairs; ties count one half.
double brute_u(const std::vector<double>& a, const std::vector<double>& b) {
    double u = 0;
    for (double x : a)
        for (double y : b) u += x > y ? 1.0 : (x == y ? 0.5 : 0.0);
    return std::min(u, static_cast<double>(a.size() * b.size()) - u);
}

}  // namespace

TEST_CASE("property: Mann-Whitney U is bounded, symmetric and matches enumeration") {
    Rng rng = make_rng(701, 0);
    std::uniform_int_distribution<int> n(1, 12), v(0, 6);
    for (int i = 0; i < kPropertyCases; ++i) {
        std::vector<double> a(static_cast<std::size_t>(n(rng))), b(static_cast<std::size_t>(n(rng)));
        for (auto& x : a) x = v(rng);
        for (auto& x : b) x = v(rng);
        const auto ab = mann_whitney_u(a, b);
        const auto ba = mann_whitney_u(b, a);
        REQUIRE(ab.u >= 0.0);
        REQUIRE(ab.u <= static_cast<double>(a.size() * b.size()));
        REQUIRE(ab.u == ba.u);
        REQUIRE(ab.p == doctest::Approx(ba.p).epsilon(1e-12));
        REQUIRE(ab.p >= 0.0);
        REQUIRE(ab.p <= 1.0);
        REQUIRE(ab.u == doctest::Approx(brute_u(a, b)));
    }
}

TEST_CASE("property: ITR in [0, 1) for non-overlapping schedules, zero iff no gaps") {
    Rng rng = make_rng(702, 0);
    std::uniform_int_distribution<int> n(2, 6), gap(0, 3), dur(1, 6);
    for (int i = 0; i < kPropertyCases; ++i) {
        Schedule s;
        Minutes t = at(0, hm(9));
        bool any_gap = false;
        const int count = n(rng);
        for (int k = 0; k < count; ++k) {
            const Minutes g = k == 0 ? 0 : gap(rng) * 45;
            any_gap = any_gap || g > 0;
            t += g;
            auto x = slot(k, 0, 0, dur(rng) * 15);
            x.start = t;
            t = x.end();
            s.assignments.push_back({static_cast<std::size_t>(count - 1 - k), x});
        }
        const auto itr = idle_time_ratio(s);
        REQUIRE(itr.has_value());
        REQUIRE(*itr >= 0.0);
        REQUIRE(*itr < 1.0);
        REQUIRE((*itr == 0.0) == !any_gap);
    }
}
