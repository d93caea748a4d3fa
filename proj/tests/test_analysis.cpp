#include <numeric>

#include "doctest.h"
#include "ffarc/analysis.hpp"
#include "ffarc/generator.hpp"
#include "oracles.hpp"

using namespace ffarc;

TEST_SUITE("analysis") {

TEST_CASE("load profile of a single wrap-around arc") {
    const auto inst = oracle::make_arcs(12, {{10, 2}});
    const LoadProfile p = load_profile(inst);
    CHECK(p.loads == oracle::loads_by_positions(inst));
    CHECK(p.min_load == 0);
    CHECK(p.argmin_point == 2);
    CHECK(p.max_load == 1);
    CHECK(p.argmax_point == 0);  // ties break toward the smallest position
}

TEST_CASE("load profile of three arcs, counted by the position oracle") {
    // {0..7}, {4..11} (end wraps to 0 in the encoding), {10,11,0,1}
    const auto inst = oracle::make_arcs(12, {{0, 8}, {4, 0}, {10, 2}});
    const LoadProfile p = load_profile(inst);
    CHECK(p.loads == oracle::loads_by_positions(inst));
    CHECK(p.max_load == 2);
    CHECK(p.min_load == 1);
    CHECK(p.argmin_point == 2);
}

TEST_CASE("empty instance has all-zero loads") {
    const ArcInstance inst(12, {});
    const LoadProfile p = load_profile(inst);
    CHECK(p.min_load == 0);
    CHECK(p.max_load == 0);
    CHECK(std::accumulate(p.loads.begin(), p.loads.end(), 0) == 0);
}

TEST_CASE("total arc length equals the load mass") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        ArcGenParams params;
        params.count = rng.range(0, 12);
        params.circle_size = 2 * rng.range(4, 20);
        params.grid = trial % 2 ? 1 : 2;
        const ArcInstance inst = random_arc_instance(rng, params);
        int mass = 0;
        for (int id = 0; id < inst.size(); ++id) mass += inst.length(id);
        const LoadProfile p = load_profile(inst);
        CHECK(mass == std::accumulate(p.loads.begin(), p.loads.end(), 0));
        CHECK(p.min_load <= p.max_load);
        CHECK(p.max_load <= inst.size());

        // dropping every arc through the argmin leaves that position bare
        std::vector<Arc> kept;
        for (const Arc& a : inst.arcs())
            if (!inst.covers(a.id, p.argmin_point)) kept.push_back({(int)kept.size(), a.start, a.end});
        const ArcInstance rest(inst.circle_size(), std::move(kept));
        CHECK(load_profile(rest).loads[p.argmin_point] == 0);
    }
}

TEST_CASE("k pairwise-overlapping intervals have omega k") {
    std::vector<Interval> spans;
    for (int id = 0; id < 5; ++id) spans.push_back({id, 2 + id, 8 + id});
    const IntervalInstance inst(14, std::move(spans));
    const CliqueReport report = max_clique(inst);
    CHECK(report.omega == 5);
    CHECK(report.witness == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("circular triple with no common point: omega exceeds the max load") {
    // pairwise overlapping, no shared position: the Helly property fails on
    // circles
    const auto inst = oracle::make_arcs(12, {{0, 8}, {4, 0}, {8, 4}});
    CHECK(inst.overlaps(0, 1));
    CHECK(inst.overlaps(1, 2));
    CHECK(inst.overlaps(2, 0));
    const CliqueReport report = max_clique(inst);
    CHECK(report.omega == 3);
    CHECK(report.witness == std::vector<int>{0, 1, 2});
    CHECK(load_profile(inst).max_load == 2);
}

TEST_CASE("interval omega always equals the max load") {
    Rng rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        IntervalGenParams params;
        params.count = rng.range(0, 14);
        params.line_size = 36;
        const IntervalInstance inst = random_interval_instance(rng, params);
        CHECK(max_clique(inst).omega == load_profile(inst).max_load);
    }
}

TEST_CASE("branch-and-bound matches subset enumeration on random arcs") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        ArcGenParams params;
        params.count = rng.range(0, 11);
        params.circle_size = 2 * rng.range(4, 15);
        const ArcInstance inst = random_arc_instance(rng, params);
        const auto [omega, witness] = oracle::clique_bruteforce(inst);
        const CliqueReport report = max_clique(inst);
        CHECK(report.omega == omega);
        CHECK(report.witness == witness);
        CHECK(load_profile(inst).max_load <= report.omega);
    }
}

TEST_CASE("exact search refuses oversized instances instead of guessing") {
    std::vector<Interval> spans;
    for (int id = 0; id < 26; ++id) spans.push_back({id, 0, 2});
    const IntervalInstance inst(4, std::move(spans));
    CHECK_THROWS_AS(max_clique(inst), UsageError);
    CHECK(max_clique(inst, 26).omega == 26);  // raised limit works
}

TEST_CASE("empty instance reports omega zero") {
    const CliqueReport report = max_clique(ArcInstance(6, {}));
    CHECK(report.omega == 0);
    CHECK(report.witness.empty());
}

}  // TEST_SUITE
