#include "ffarc/transform.hpp"

#include <algorithm>

#include "ffarc/analysis.hpp"

namespace ffarc {

namespace {

int floor_mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

UnfoldResult unfold(const ArcInstance& instance, int cut_point) {
    const int m = instance.circle_size();
    if (cut_point < 0 || cut_point >= m) throw UsageError("cut point must lie in [0, M)");

    std::vector<Interval> intervals;
    UnfoldMapping mapping;
    mapping.cut_point = cut_point;

    int next_id = 0;
    for (const Arc& a : instance.arcs()) {
        const int len = instance.length(a.id);
        if (instance.crosses(a.id, cut_point)) {
            const int right_len = floor_mod(a.end - cut_point, m);
            const int left_len = len - right_len;  // both >= 1 for a crossing arc
            const int left_id = next_id++;
            const int right_id = next_id++;
            intervals.push_back({left_id, m - left_len, m});
            intervals.push_back({right_id, 0, right_len});
            mapping.split_pairs.push_back({a.id, left_id, right_id});
        } else {
            const int start = floor_mod(a.start - cut_point, m);
            const int id = next_id++;
            intervals.push_back({id, start, start + len});
            mapping.passthrough.push_back({a.id, id});
        }
    }
    return {IntervalInstance(m, std::move(intervals)), std::move(mapping)};
}

int auto_cut_point(const ArcInstance& instance) {
    const LoadProfile profile = load_profile(instance);
    const int m = instance.circle_size();
    std::vector<char> has_start(static_cast<std::size_t>(m), 0);
    for (const Arc& a : instance.arcs()) has_start[static_cast<std::size_t>(a.start)] = 1;
    for (int p = 0; p < m; ++p) {
        if (profile.loads[static_cast<std::size_t>(p)] == profile.min_load &&
            !has_start[static_cast<std::size_t>(p)])
            return p;
    }
    return profile.argmin_point;
}

PresentationOrder expand_order(const PresentationOrder& order, const UnfoldMapping& mapping) {
    const int n = mapping.source_count();
    if (!order.is_permutation_of(n))
        throw UsageError("order does not match the mapping's source arcs");

    struct Target {
        bool split = false;
        int first = -1;
        int second = -1;
    };
    std::vector<Target> targets(static_cast<std::size_t>(n));
    for (const UnfoldMapping::Split& s : mapping.split_pairs) {
        if (s.arc_id < 0 || s.arc_id >= n) throw UsageError("mapping references an unknown arc");
        targets[static_cast<std::size_t>(s.arc_id)] = {true, s.left_id, s.right_id};
    }
    for (const UnfoldMapping::Pass& p : mapping.passthrough) {
        if (p.arc_id < 0 || p.arc_id >= n) throw UsageError("mapping references an unknown arc");
        targets[static_cast<std::size_t>(p.arc_id)] = {false, p.interval_id, -1};
    }

    PresentationOrder expanded;
    expanded.ids.reserve(static_cast<std::size_t>(mapping.target_count()));
    for (int id : order.ids) {
        const Target& t = targets[static_cast<std::size_t>(id)];
        if (t.first < 0) throw UsageError("mapping does not cover arc " + std::to_string(id));
        expanded.ids.push_back(t.first);
        if (t.split) expanded.ids.push_back(t.second);
    }
    return expanded;
}

}  // namespace ffarc
