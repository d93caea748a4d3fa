#include "ffarc/ffengine.hpp"

#include <algorithm>

namespace ffarc {

namespace {

int floor_mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

template <class Inst>
std::vector<std::vector<char>> adjacency(const Inst& inst) {
    const int n = inst.size();
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (inst.overlaps(i, j)) {
                adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
                adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
            }
    return adj;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Colors of already-presented neighbors of the element at step t.
std::vector<int> neighbor_colors(const std::vector<std::vector<char>>& adj,
                                 const PresentationOrder& order,
                                 const std::vector<int>& colors, int t) {
    std::vector<int> blocked;
    const int self = order.ids[static_cast<std::size_t>(t)];
    for (int u = 0; u < t; ++u) {
        if (adj[static_cast<std::size_t>(self)][static_cast<std::size_t>(order.ids[static_cast<std::size_t>(u)])])
            blocked.push_back(colors[static_cast<std::size_t>(u)]);
    }
    return sorted_unique(std::move(blocked));
}

template <class Inst>
FFRun ff_color_impl(const Inst& inst, const PresentationOrder& order) {
    require_permutation(order, inst.size());
    const auto adj = adjacency(inst);
    const int n = inst.size();

    FFRun run;
    run.order = order;
    run.colors.colors.resize(static_cast<std::size_t>(n));
    run.blocked.resize(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        run.blocked[static_cast<std::size_t>(t)] =
            neighbor_colors(adj, order, run.colors.colors, t);
        run.colors.colors[static_cast<std::size_t>(t)] =
            lowest_available(run.blocked[static_cast<std::size_t>(t)]);
    }
    return run;
}

template <class Inst>
std::vector<std::pair<int, int>> conflicts_impl(const Inst& inst,
                                                const PresentationOrder& order,
                                                const ChromaticSequence& colors) {
    require_permutation(order, inst.size());
    if (colors.size() != inst.size())
        throw UsageError("coloring length does not match the instance");
    std::vector<std::pair<int, int>> bad;
    const int n = inst.size();
    for (int t = 0; t < n; ++t)
        for (int u = 0; u < t; ++u)
            if (colors.colors[static_cast<std::size_t>(t)] ==
                    colors.colors[static_cast<std::size_t>(u)] &&
                inst.overlaps(order.ids[static_cast<std::size_t>(t)],
                              order.ids[static_cast<std::size_t>(u)]))
                bad.emplace_back(u, t);
    return bad;
}

}  // namespace

int lowest_available(std::span<const int> blocked) {
    const std::size_t cap = blocked.size() + 2;
    std::vector<char> seen(cap, 0);
    for (int c : blocked)
        if (c >= 1 && static_cast<std::size_t>(c) < cap) seen[static_cast<std::size_t>(c)] = 1;
    int c = 1;
    while (seen[static_cast<std::size_t>(c)]) ++c;
    return c;
}

FFRun ff_color(const ArcInstance& instance, const PresentationOrder& order) {
    return ff_color_impl(instance, order);
}

FFRun ff_color(const IntervalInstance& instance, const PresentationOrder& order) {
    return ff_color_impl(instance, order);
}

FFRun ff_color(const Instance& instance, const PresentationOrder& order) {
    return std::visit([&](const auto& inst) { return ff_color_impl(inst, order); }, instance);
}

FFRun ff_split_merge(const ArcInstance& instance, const PresentationOrder& order,
                     int special_id, int cut_point) {
    require_permutation(order, instance.size());
    if (special_id < 0 || special_id >= instance.size())
        throw UsageError("special arc id out of range");
    if (!instance.crosses(special_id, cut_point))
        throw UsageError("special arc does not cross the cut point");

    const auto adj = adjacency(instance);
    const int n = instance.size();
    const int m = instance.circle_size();

    const Arc& special = instance.arc(special_id);
    const int len = instance.length(special_id);
    const int right_len = floor_mod(special.end - cut_point, m);
    const int left_len = len - right_len;  // >= 1 because the arc crosses the cut

    FFRun run;
    run.order = order;
    run.colors.colors.resize(static_cast<std::size_t>(n));
    run.blocked.resize(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        const int id = order.ids[static_cast<std::size_t>(t)];
        run.blocked[static_cast<std::size_t>(t)] =
            neighbor_colors(adj, order, run.colors.colors, t);
        const auto& blocked = run.blocked[static_cast<std::size_t>(t)];
        if (id != special_id) {
            run.colors.colors[static_cast<std::size_t>(t)] = lowest_available(blocked);
            continue;
        }
        std::vector<int> left_blocked;
        std::vector<int> right_blocked;
        for (int u = 0; u < t; ++u) {
            const int other = order.ids[static_cast<std::size_t>(u)];
            const int color = run.colors.colors[static_cast<std::size_t>(u)];
            if (instance.overlaps_span(other, special.start, left_len))
                left_blocked.push_back(color);
            if (instance.overlaps_span(other, cut_point, right_len))
                right_blocked.push_back(color);
        }
        const int left = lowest_available(left_blocked);
        const int right = lowest_available(right_blocked);
        int c = std::max(left, right);
        while (std::binary_search(blocked.begin(), blocked.end(), c)) ++c;
        run.colors.colors[static_cast<std::size_t>(t)] = c;
        run.split = SplitDiagnostics{special_id, t, left, right};
    }
    return run;
}

FFRun ff_paused(const IntervalInstance& instance, const PresentationOrder& order,
                int pause_index, std::span<const PinnedColor> pinned) {
    require_permutation(order, instance.size());
    const int n = instance.size();
    const int k = static_cast<int>(pinned.size());
    if (pause_index < 0 || pause_index + k > n)
        throw UsageError("pause index and pins do not fit the order");
    for (int i = 0; i < k; ++i) {
        if (order.ids[static_cast<std::size_t>(pause_index + i)] != pinned[static_cast<std::size_t>(i)].id)
            throw UsageError("pinned id " + std::to_string(pinned[static_cast<std::size_t>(i)].id) +
                             " is not at order position " + std::to_string(pause_index + i));
        if (pinned[static_cast<std::size_t>(i)].color < 1)
            throw UsageError("pinned colors must be positive");
    }

    const auto adj = adjacency(instance);
    FFRun run;
    run.order = order;
    run.colors.colors.resize(static_cast<std::size_t>(n));
    run.blocked.resize(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        run.blocked[static_cast<std::size_t>(t)] =
            neighbor_colors(adj, order, run.colors.colors, t);
        if (t >= pause_index && t < pause_index + k) {
            run.colors.colors[static_cast<std::size_t>(t)] =
                pinned[static_cast<std::size_t>(t - pause_index)].color;
            run.pinned_steps.push_back(t);
        } else {
            run.colors.colors[static_cast<std::size_t>(t)] =
                lowest_available(run.blocked[static_cast<std::size_t>(t)]);
        }
    }
    return run;
}

std::vector<std::pair<int, int>> coloring_conflicts(const ArcInstance& instance,
                                                    const PresentationOrder& order,
                                                    const ChromaticSequence& colors) {
    return conflicts_impl(instance, order, colors);
}

std::vector<std::pair<int, int>> coloring_conflicts(const IntervalInstance& instance,
                                                    const PresentationOrder& order,
                                                    const ChromaticSequence& colors) {
    return conflicts_impl(instance, order, colors);
}

}  // namespace ffarc
