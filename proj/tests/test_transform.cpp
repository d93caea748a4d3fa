#include <numeric>

#include "doctest.h"
#include "ffarc/analysis.hpp"
#include "ffarc/generator.hpp"
#include "ffarc/transform.hpp"
#include "oracles.hpp"

using namespace ffarc;

TEST_SUITE("transform") {

TEST_CASE("no arc crosses the cut: one interval per arc") {
    const auto inst = oracle::make_arcs(12, {{2, 5}, {6, 9}});
    const UnfoldResult r = unfold(inst, 0);
    CHECK(r.mapping.split_pairs.empty());
    CHECK(r.instance.size() == 2);
    CHECK(r.instance.interval(0) == Interval{0, 2, 5});
    CHECK(r.instance.interval(1) == Interval{1, 6, 9});
}

TEST_CASE("a crossing arc splits into a left piece ending at M and a right piece from 0") {
    const auto inst = oracle::make_arcs(12, {{10, 2}});
    const UnfoldResult r = unfold(inst, 0);
    REQUIRE(r.mapping.split_pairs.size() == 1);
    CHECK(r.mapping.split_pairs[0] == UnfoldMapping::Split{0, 0, 1});
    CHECK(r.instance.size() == 2);  // m + 1
    CHECK(r.instance.interval(0) == Interval{0, 10, 12});
    CHECK(r.instance.interval(1) == Interval{1, 0, 2});
    CHECK_FALSE(r.instance.overlaps(0, 1));
    CHECK(render_mapping(r.mapping) == "split 0 -> 0 1\n");
}

TEST_CASE("relabeling rotates non-crossing arcs to the cut frame") {
    const auto inst = oracle::make_arcs(12, {{10, 2}});
    const UnfoldResult r = unfold(inst, 4);  // arc does not cover 3 and 4
    CHECK(r.mapping.split_pairs.empty());
    CHECK(r.instance.interval(0) == Interval{0, 6, 10});
}

TEST_CASE("arcs spanning the cut boundary split; an arc starting at the cut does not") {
    const auto inst = oracle::make_arcs(20, {{18, 4}, {16, 2}, {1, 6}, {8, 14}});
    // cut at 1: the first two arcs cover cells 0 and 1
    const UnfoldResult r = unfold(inst, 1);
    CHECK(r.mapping.split_pairs.size() == 2);
    CHECK(r.instance.size() == 6);  // m + K
    const LoadProfile before = load_profile(inst);
    CHECK(before.loads[1] == 3);  // arc 2 starts at the cut and is not severed
    int crossing = 0;
    for (int id = 0; id < inst.size(); ++id)
        if (inst.crosses(id, 1)) ++crossing;
    CHECK(crossing == 2);
}

TEST_CASE("auto cut prefers a minimum-load position where no arc starts") {
    // load 0 on positions 5..11; both arcs start at 0
    const auto inst = oracle::make_arcs(12, {{0, 3}, {0, 5}});
    CHECK(auto_cut_point(inst) == 5);
}

TEST_CASE("auto cut falls back to the plain argmin when every choice has a start") {
    // three unit arcs tile the circle: every position is a minimum and a start
    const auto inst = oracle::make_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(auto_cut_point(inst) == 0);
    const UnfoldResult r = unfold(inst, 0);
    CHECK(r.mapping.split_pairs.empty());  // unit arcs cannot be severed
}

TEST_CASE("on an even grid the auto cut severs exactly min_load arcs") {
    Rng rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        ArcGenParams params;
        params.count = rng.range(1, 12);
        params.circle_size = 36;
        params.max_len = 20;
        const ArcInstance inst = random_arc_instance(rng, params);
        const LoadProfile profile = load_profile(inst);
        const int cut = auto_cut_point(inst);
        CHECK(profile.loads[cut] == profile.min_load);
        const UnfoldResult r = unfold(inst, cut);
        CHECK(static_cast<int>(r.mapping.split_pairs.size()) == profile.min_load);
        CHECK(r.instance.size() == inst.size() + profile.min_load);
    }
}

TEST_CASE("unfold preserves occupied mass, per-cell loads, and pair overlaps") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        ArcGenParams params;
        params.count = rng.range(1, 12);
        params.circle_size = 2 * rng.range(5, 18);
        params.grid = trial % 2 ? 1 : 2;
        const ArcInstance inst = random_arc_instance(rng, params);
        const int cut = rng.below(inst.circle_size());
        const UnfoldResult r = unfold(inst, cut);

        int arc_mass = 0;
        for (int id = 0; id < inst.size(); ++id) arc_mass += inst.length(id);
        int interval_mass = 0;
        for (int id = 0; id < r.instance.size(); ++id) interval_mass += r.instance.length(id);
        CHECK(arc_mass == interval_mass);

        const LoadProfile before = load_profile(inst);
        const LoadProfile after = load_profile(r.instance);
        CHECK(before.max_load == after.max_load);
        for (int p = 0; p < inst.circle_size(); ++p)
            CHECK(after.loads[p] == before.loads[(p + cut) % inst.circle_size()]);

        // split pieces never overlap each other
        for (const UnfoldMapping::Split& s : r.mapping.split_pairs)
            CHECK_FALSE(r.instance.overlaps(s.left_id, s.right_id));

        // non-crossing arcs keep their overlap pattern exactly
        for (const UnfoldMapping::Pass& a : r.mapping.passthrough)
            for (const UnfoldMapping::Pass& b : r.mapping.passthrough)
                CHECK(inst.overlaps(a.arc_id, b.arc_id) ==
                      r.instance.overlaps(a.interval_id, b.interval_id));

        // a neighbor overlaps a split arc iff it overlaps one of its pieces
        for (const UnfoldMapping::Split& s : r.mapping.split_pairs)
            for (const UnfoldMapping::Pass& a : r.mapping.passthrough)
                CHECK(inst.overlaps(s.arc_id, a.arc_id) ==
                      (r.instance.overlaps(s.left_id, a.interval_id) ||
                       r.instance.overlaps(s.right_id, a.interval_id)));
    }
}

TEST_CASE("expand_order keeps arcs in place and splits expand to adjacent pairs") {
    const auto inst = oracle::make_arcs(12, {{2, 5}, {10, 2}, {6, 9}});
    const UnfoldResult r = unfold(inst, 0);  // arc 1 splits
    REQUIRE(r.mapping.split_pairs.size() == 1);
    const int left = r.mapping.split_pairs[0].left_id;
    const int right = r.mapping.split_pairs[0].right_id;

    const PresentationOrder expanded = expand_order(PresentationOrder{{0, 1, 2}}, r.mapping);
    REQUIRE(expanded.size() == 4);
    CHECK(expanded.ids[1] == left);
    CHECK(expanded.ids[2] == right);
    CHECK(expanded.is_permutation_of(4));
}

TEST_CASE("expand_order with no splits is an id relabeling") {
    const auto inst = oracle::make_arcs(12, {{2, 5}, {6, 9}});
    const UnfoldResult r = unfold(inst, 0);
    const PresentationOrder expanded = expand_order(PresentationOrder{{1, 0}}, r.mapping);
    CHECK(expanded == PresentationOrder{{1, 0}});
}

TEST_CASE("two split arcs expand in place to length m+2") {
    const auto inst = oracle::make_arcs(20, {{18, 4}, {16, 2}, {8, 14}});
    const UnfoldResult r = unfold(inst, 1);
    REQUIRE(r.mapping.split_pairs.size() == 2);
    const PresentationOrder expanded = expand_order(PresentationOrder{{2, 0, 1}}, r.mapping);
    CHECK(expanded.size() == 5);
    CHECK(expanded.is_permutation_of(5));
}

TEST_CASE("expand_order rejects orders that do not match the mapping") {
    const auto inst = oracle::make_arcs(12, {{2, 5}, {6, 9}});
    const UnfoldResult r = unfold(inst, 0);
    CHECK_THROWS_AS(expand_order(PresentationOrder{{0, 1, 2}}, r.mapping), UsageError);
    CHECK_THROWS_AS(expand_order(PresentationOrder{{0}}, r.mapping), UsageError);
}

TEST_CASE("unfold rejects an out-of-range cut point") {
    const auto inst = oracle::make_arcs(12, {{2, 5}});
    CHECK_THROWS_AS(unfold(inst, 12), UsageError);
    CHECK_THROWS_AS(unfold(inst, -1), UsageError);
}

}  // TEST_SUITE
