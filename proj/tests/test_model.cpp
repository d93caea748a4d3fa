#include "doctest.h"
#include "ffarc/generator.hpp"
#include "ffarc/model.hpp"
#include "oracles.hpp"

using namespace ffarc;

TEST_SUITE("model") {

TEST_CASE("interval overlap is half-open: touching endpoints do not overlap") {
    const auto inst = oracle::make_ints(20, {{0, 5}, {5, 9}});
    CHECK_FALSE(inst.overlaps(0, 1));
    CHECK_FALSE(inst.overlaps(1, 0));
}

TEST_CASE("wrap-around arc overlaps an arc behind the seam") {
    const auto inst = oracle::make_arcs(12, {{10, 2}, {0, 3}});
    CHECK(inst.overlaps(0, 1));
    CHECK(inst.overlaps(1, 0));
}

TEST_CASE("an element overlaps itself") {
    const auto inst = oracle::make_ints(10, {{2, 4}, {2, 4}});
    CHECK(inst.overlaps(0, 0));
    CHECK(inst.overlaps(0, 1));
}

TEST_CASE("overlap agrees with the position-set oracle and is symmetric") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        ArcGenParams ap;
        ap.count = rng.range(1, 10);
        ap.circle_size = 2 * rng.range(4, 18);
        ap.grid = trial % 2 == 0 ? 2 : 1;
        const ArcInstance arcs = random_arc_instance(rng, ap);
        for (int a = 0; a < arcs.size(); ++a)
            for (int b = 0; b < arcs.size(); ++b) {
                CHECK(arcs.overlaps(a, b) == oracle::overlap_by_positions(arcs, a, b));
                CHECK(arcs.overlaps(a, b) == arcs.overlaps(b, a));
            }

        IntervalGenParams ip;
        ip.count = rng.range(1, 10);
        ip.line_size = rng.range(6, 30);
        const IntervalInstance ints = random_interval_instance(rng, ip);
        for (int a = 0; a < ints.size(); ++a)
            for (int b = 0; b < ints.size(); ++b) {
                CHECK(ints.overlaps(a, b) == oracle::overlap_by_positions(ints, a, b));
                // max(starts) < min(ends), the classic interval test
                const Interval& x = ints.interval(a);
                const Interval& y = ints.interval(b);
                CHECK(ints.overlaps(a, b) ==
                      (std::max(x.start, y.start) < std::min(x.end, y.end)));
            }
    }
}

TEST_CASE("parse: arc instance") {
    const Instance inst = parse_instance("circle 12\narc 0 10 2\n");
    const auto& arcs = std::get<ArcInstance>(inst);
    CHECK(arcs.circle_size() == 12);
    REQUIRE(arcs.size() == 1);
    CHECK(arcs.arc(0) == Arc{0, 10, 2});
    CHECK(arcs.length(0) == 4);
}

TEST_CASE("parse: interval instance with disjoint intervals") {
    const Instance inst = parse_instance("line 20\nint 0 0 5\nint 1 5 9\n");
    const auto& ints = std::get<IntervalInstance>(inst);
    CHECK(ints.line_size() == 20);
    REQUIRE(ints.size() == 2);
    CHECK_FALSE(ints.overlaps(0, 1));
}

TEST_CASE("parse: full-circle arc is rejected with the offending line") {
    try {
        parse_instance("circle 12\narc 0 3 3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("parse: malformed input reports the line") {
    CHECK_THROWS_AS(parse_instance("circle 12\narc 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("circle 12\nfrob 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("circle twelve\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("line 10\nint 0 4 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("line 10\narc 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance(""), ParseError);

    try {
        parse_instance("circle 12\narc 0 1 2\narc 0 3 4\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    // gap in ids
    CHECK_THROWS_AS(parse_instance("circle 12\narc 0 1 2\narc 2 3 4\n"), ParseError);
}

TEST_CASE("parse skips comments and blank lines") {
    const Instance inst = parse_instance("# a comment\n\ncircle 8\n# another\narc 0 6 1\n");
    CHECK(std::get<ArcInstance>(inst).size() == 1);
}

TEST_CASE("render emits elements sorted by id") {
    ArcInstance arcs(10, {{1, 4, 6}, {0, 2, 3}});
    CHECK(render_instance(arcs) == "circle 10\narc 0 2 3\narc 1 4 6\n");
}

TEST_CASE("parse-render round trip on random instances") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        ArcGenParams ap;
        ap.count = rng.range(0, 12);
        ap.circle_size = 2 * rng.range(3, 20);
        const ArcInstance arcs = random_arc_instance(rng, ap);
        CHECK(std::get<ArcInstance>(parse_instance(render_instance(arcs))) == arcs);

        IntervalGenParams ip;
        ip.count = rng.range(0, 12);
        ip.line_size = rng.range(4, 40);
        const IntervalInstance ints = random_interval_instance(rng, ip);
        CHECK(std::get<IntervalInstance>(parse_instance(render_instance(ints))) == ints);
    }
}

TEST_CASE("order and colors lines round trip") {
    PresentationOrder order{{2, 0, 1}};
    CHECK(parse_order(render_order(order)) == order);
    CHECK(render_order(order) == "order 2 0 1\n");

    ChromaticSequence seq{{1, 1, 2, 3}};
    CHECK(parse_colors(render_colors(seq)) == seq);
    CHECK(render_colors(seq) == "colors 1 1 2 3\n");
    CHECK(seq.used() == 3);

    CHECK_THROWS_AS(parse_order("colors 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_colors("colors 0 2\n"), ParseError);
}

TEST_CASE("order permutation validation") {
    CHECK(PresentationOrder{{0, 2, 1}}.is_permutation_of(3));
    CHECK_FALSE(PresentationOrder{{0, 2, 2}}.is_permutation_of(3));
    CHECK_FALSE(PresentationOrder{{0, 1}}.is_permutation_of(3));
    CHECK_THROWS_AS(require_permutation(PresentationOrder{{0, 3}}, 2), UsageError);
}

TEST_CASE("instance constructors enforce the invariants directly") {
    CHECK_THROWS_AS(ArcInstance(12, {{0, 3, 3}}), UsageError);
    CHECK_THROWS_AS(ArcInstance(12, {{0, 1, 2}, {0, 3, 4}}), UsageError);
    CHECK_THROWS_AS(ArcInstance(0, {}), UsageError);
    CHECK_THROWS_AS(IntervalInstance(10, {{0, 5, 5}}), UsageError);
    CHECK_THROWS_AS(IntervalInstance(10, {{0, 2, 11}}), UsageError);
}

TEST_CASE("arc length spans one to M-1 cells") {
    const auto inst = oracle::make_arcs(12, {{1, 0}, {5, 6}});
    CHECK(inst.length(0) == 11);
    CHECK(inst.length(1) == 1);
    CHECK(inst.covers(0, 11));
    CHECK_FALSE(inst.covers(0, 0));
    CHECK(inst.crosses(0, 6));
    CHECK_FALSE(inst.crosses(0, 1));   // starts there
    CHECK_FALSE(inst.crosses(1, 5));   // starts there
    CHECK_FALSE(inst.crosses(1, 6));   // ends there
}

}  // TEST_SUITE
