#pragma once

#include "ffarc/model.hpp"

namespace ffarc {

struct UnfoldResult {
    IntervalInstance instance;
    UnfoldMapping mapping;
};

// Cut the circle at the boundary before `cut_point` and unfold onto a line of
// size M: cells relabel p -> (p - cut_point) mod M. Arcs spanning that
// boundary split into a left interval ending at M and a right interval
// starting at 0; all others map to single intervals. Interval ids are
// assigned in arc-id order, left piece before right piece. Per-cell coverage
// (hence max load) and total occupied mass are preserved exactly.
UnfoldResult unfold(const ArcInstance& instance, int cut_point);

// Default cut position: a minimum-load position, preferring one where no arc
// starts (there the cut severs exactly min_load arcs); ties go to the
// smallest index, falling back to the plain load argmin.
int auto_cut_point(const ArcInstance& instance);

// Rewrite an order over the source arcs into an order over the unfolded
// intervals: each split arc expands in place to (left, right), left first.
PresentationOrder expand_order(const PresentationOrder& order, const UnfoldMapping& mapping);

}  // namespace ffarc
