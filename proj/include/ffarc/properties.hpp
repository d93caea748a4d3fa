#pragma once

#include <optional>

#include "ffarc/ffengine.hpp"
#include "ffarc/model.hpp"

namespace ffarc {

// Comparison of the paused process (the pair at positions pause_index and
// pause_index+1 pinned to delta) against the plain run on the same order.
// A position j >= pause_index+2 is a violation when the paused color exceeds
// the non-paused one, or the non-paused color exceeds 8*omega.
struct DominanceReport {
    PresentationOrder order;
    int pause_index = 0;
    int delta = 0;
    int omega = 0;
    ChromaticSequence paused;
    ChromaticSequence nonpaused;

    struct Violation {
        int position = 0;  // 0-based order position
        int paused_color = 0;
        int nonpaused_color = 0;

        bool operator==(const Violation&) const = default;
    };
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
};

// Runs the non-paused and paused processes and compares the suffix. The
// pinned pair must not overlap; delta defaults to 8*omega+1 and must exceed
// 8*omega. With strict_extremal the pair must additionally be the unique
// leftmost and rightmost intervals of the instance.
DominanceReport check_lemma1(const IntervalInstance& instance, const PresentationOrder& order,
                             int pause_index, std::optional<int> delta = std::nullopt,
                             bool strict_extremal = false);

// Adversarial instance with omega = w on which First-Fit, fed the returned
// order, uses exactly w+1 colors. Ids: c1 = 0, a2..aw = 1..w-1,
// c2..c_{w-1} = w..2w-3, b1..b_{w-2} = 2w-2..3w-5, and the cut-crossing arc
// last (3w-4). {c1, a2..aw} = {0..w-1} is a maximum clique, and the
// split/merge diagnostics at the special arc read L = w-1, R = w.
struct Construction {
    ArcInstance instance;
    PresentationOrder order;
    ChromaticSequence expected;
    int special_id = 0;
    int cut_point = 0;
};

Construction build_construction(int w);

// Closed-form expected chromatic sequence of the construction:
// <1, 1, 2..w, 2..w-1, 2..w-2, w+1>.
ChromaticSequence construction_expected_colors(int w);

enum class BoundName { raman8w, prop1, theorem8wK, corollary9w };

std::string_view bound_name(BoundName name);

struct BoundVerdict {
    BoundName name = BoundName::raman8w;
    int omega = 0;
    int k = 0;
    int colors_used = 0;
    int bound_value = 0;
    bool satisfied = false;
};

// Runs First-Fit on the order and evaluates every applicable ceiling:
// raman8w (8w) for interval instances; prop1 (8w+1, when K = 1),
// theorem8wK (8w+K) and corollary9w (9w) for arc instances, K being the
// minimum point load.
std::vector<BoundVerdict> check_bounds(const ArcInstance& instance,
                                       const PresentationOrder& order,
                                       int clique_limit = 25);
std::vector<BoundVerdict> check_bounds(const IntervalInstance& instance,
                                       const PresentationOrder& order,
                                       int clique_limit = 25);
std::vector<BoundVerdict> check_bounds(const Instance& instance, const PresentationOrder& order,
                                       int clique_limit = 25);

// "BOUND <name> omega=<w> K=<k> used=<c> bound=<b> <PASS|FAIL>"
std::string render_verdict(const BoundVerdict& verdict);
// One "VIOLATION j=<j> paused=<x> nonpaused=<y>" line per violation,
// j rendered 1-based.
std::string render_violations(const DominanceReport& report);

}  // namespace ffarc
