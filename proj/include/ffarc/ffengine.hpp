#pragma once

#include <optional>
#include <span>
#include <utility>

#include "ffarc/model.hpp"

namespace ffarc {

// Least positive integer not present in `blocked`. The set may be unsorted
// and contain duplicates or non-positive entries (ignored).
int lowest_available(std::span<const int> blocked);

// Diagnostics of the split/merge step: the colors the special arc would take
// against its left-part and right-part neighbors alone.
struct SplitDiagnostics {
    int special_id = -1;
    int step = -1;          // position of the special arc in the order
    int left_color = 0;     // L
    int right_color = 0;    // R
};

// One deterministic First-Fit execution. blocked[t] is exactly the sorted set
// of colors held by already-presented neighbors of the t-th element; for
// non-pinned steps colors[t] is the least positive integer outside it.
struct FFRun {
    PresentationOrder order;
    ChromaticSequence colors;
    std::vector<std::vector<int>> blocked;
    std::vector<int> pinned_steps;
    std::optional<SplitDiagnostics> split;

    int colors_used() const { return colors.used(); }
};

FFRun ff_color(const ArcInstance& instance, const PresentationOrder& order);
FFRun ff_color(const IntervalInstance& instance, const PresentationOrder& order);
FFRun ff_color(const Instance& instance, const PresentationOrder& order);

// First-Fit where the designated cut-crossing arc is colored in three steps:
// find L against left-part neighbors, R against right-part neighbors, then
// take the least color >= max{L, R} available against all neighbors. Every
// other step follows the plain rule. Produces the same chromatic sequence as
// ff_color; the L/R diagnostics are returned in `split`.
FFRun ff_split_merge(const ArcInstance& instance, const PresentationOrder& order,
                     int special_id, int cut_point);

struct PinnedColor {
    int id = 0;
    int color = 0;
};

// First-Fit paused after `pause_index` steps: the elements at positions
// pause_index, pause_index+1, ... receive their pinned colors verbatim
// (bypassing the least-color rule), then the process resumes with the pins
// visible as neighbor colors. Pins may violate First-Fit minimality.
FFRun ff_paused(const IntervalInstance& instance, const PresentationOrder& order,
                int pause_index, std::span<const PinnedColor> pinned);

// Pairs of order positions holding overlapping elements with equal colors;
// empty result means the coloring is proper.
std::vector<std::pair<int, int>> coloring_conflicts(const ArcInstance& instance,
                                                    const PresentationOrder& order,
                                                    const ChromaticSequence& colors);
std::vector<std::pair<int, int>> coloring_conflicts(const IntervalInstance& instance,
                                                    const PresentationOrder& order,
                                                    const ChromaticSequence& colors);

template <class Inst>
bool verify_proper(const Inst& instance, const PresentationOrder& order,
                   const ChromaticSequence& colors) {
    return coloring_conflicts(instance, order, colors).empty();
}

}  // namespace ffarc
