#include "ffarc/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace ffarc {

namespace {

LoadProfile profile_from_loads(std::vector<int> loads, int element_count) {
    LoadProfile p;
    p.loads = std::move(loads);
    if (p.loads.empty()) return p;
    p.min_load = element_count;
    p.max_load = 0;
    for (int pos = 0; pos < static_cast<int>(p.loads.size()); ++pos) {
        const int load = p.loads[static_cast<std::size_t>(pos)];
        if (load < p.min_load) {
            p.min_load = load;
            p.argmin_point = pos;
        }
        if (load > p.max_load) {
            p.max_load = load;
            p.argmax_point = pos;
        }
    }
    if (element_count == 0) p.min_load = 0;
    return p;
}

template <class Inst>
std::vector<std::uint64_t> adjacency_masks(const Inst& inst) {
    const int n = inst.size();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (inst.overlaps(i, j)) {
                adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
    return adj;
}

// Tomita-style search: candidates are greedily colored and explored in
// reverse color order so depth + color(v) bounds the reachable clique size.
class CliqueSearch {
public:
    explicit CliqueSearch(const std::vector<std::uint64_t>& adj) : adj_(adj) {}

    int run(std::uint64_t candidates) {
        best_ = 0;
        expand(candidates, 0);
        return best_;
    }

private:
    void expand(std::uint64_t cand, int depth) {
        if (cand == 0) {
            best_ = std::max(best_, depth);
            return;
        }
        std::vector<int> order;
        std::vector<int> bound;
        std::uint64_t rest = cand;
        int color = 0;
        while (rest) {
            ++color;
            std::uint64_t avail = rest;
            while (avail) {
                const int v = std::countr_zero(avail);
                const std::uint64_t bit = std::uint64_t{1} << v;
                order.push_back(v);
                bound.push_back(color);
                rest &= ~bit;
                avail &= ~bit;
                avail &= ~adj_[static_cast<std::size_t>(v)];
            }
        }
        std::uint64_t rem = cand;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (depth + bound[static_cast<std::size_t>(i)] <= best_) return;
            const int v = order[static_cast<std::size_t>(i)];
            rem &= ~(std::uint64_t{1} << v);
            expand(rem & adj_[static_cast<std::size_t>(v)], depth + 1);
        }
    }

    const std::vector<std::uint64_t>& adj_;
    int best_ = 0;
};

template <class Inst>
CliqueReport max_clique_impl(const Inst& inst, int limit) {
    const int n = inst.size();
    if (limit < 0 || limit > 63)
        throw UsageError("clique search limit must lie in [0, 63]");
    if (n > limit)
        throw UsageError("exact clique search refused: instance has " + std::to_string(n) +
                         " elements, limit is " + std::to_string(limit));
    CliqueReport report;
    if (n == 0) return report;

    const auto adj = adjacency_masks(inst);
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;  // n <= 63
    CliqueSearch search(adj);
    report.omega = search.run(all);

    // Greedy lexicographic completion: fix the smallest vertex that still
    // extends to an omega-clique using only larger ids.
    std::uint64_t cand = all;
    int fixed = 0;
    for (int v = 0; v < n && fixed < report.omega; ++v) {
        if (!((cand >> v) & 1)) continue;
        const std::uint64_t higher = v + 1 >= 64 ? 0 : ~((std::uint64_t{2} << v) - 1);
        const std::uint64_t rest = cand & adj[static_cast<std::size_t>(v)] & higher;
        if (fixed + 1 + search.run(rest) == report.omega) {
            report.witness.push_back(v);
            ++fixed;
            cand = rest;
        } else {
            cand &= ~(std::uint64_t{1} << v);
        }
    }
    return report;
}

}  // namespace

LoadProfile load_profile(const ArcInstance& instance) {
    std::vector<int> loads(static_cast<std::size_t>(instance.circle_size()), 0);
    const int m = instance.circle_size();
    for (const Arc& a : instance.arcs()) {
        const int len = instance.length(a.id);
        for (int k = 0; k < len; ++k) ++loads[static_cast<std::size_t>((a.start + k) % m)];
    }
    return profile_from_loads(std::move(loads), instance.size());
}

LoadProfile load_profile(const IntervalInstance& instance) {
    std::vector<int> loads(static_cast<std::size_t>(instance.line_size()), 0);
    for (const Interval& v : instance.intervals())
        for (int pos = v.start; pos < v.end; ++pos) ++loads[static_cast<std::size_t>(pos)];
    return profile_from_loads(std::move(loads), instance.size());
}

LoadProfile load_profile(const Instance& instance) {
    return std::visit([](const auto& inst) { return load_profile(inst); }, instance);
}

CliqueReport max_clique(const ArcInstance& instance, int limit) {
    return max_clique_impl(instance, limit);
}

CliqueReport max_clique(const IntervalInstance& instance, int limit) {
    return max_clique_impl(instance, limit);
}

CliqueReport max_clique(const Instance& instance, int limit) {
    return std::visit([&](const auto& inst) { return max_clique_impl(inst, limit); }, instance);
}

}  // namespace ffarc
