#include "ffarc/generator.hpp"

#include <algorithm>

namespace ffarc {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next() { return splitmix64(state_); }

int Rng::below(int n) {
    if (n <= 0) return 0;
    return static_cast<int>(next() % static_cast<std::uint64_t>(n));
}

int Rng::range(int lo, int hi) {
    if (hi < lo) return lo;
    return lo + below(hi - lo + 1);
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master ^ (stream + 0x632BE59BD9B4E019ull) * 0x9E3779B97F4A7C15ull;
    return splitmix64(s);
}

ArcInstance random_arc_instance(Rng& rng, const ArcGenParams& params) {
    const int m = params.circle_size;
    const int grid = std::max(1, params.grid);
    if (m < 2) throw UsageError("arc generation needs a circle of size >= 2");
    if (m % grid != 0) throw UsageError("circle size must be a multiple of the grid");

    const int max_len = params.max_len > 0 ? std::min(params.max_len, m - grid) : m - grid;
    const int lo_units = std::max(1, (params.min_len + grid - 1) / grid);
    const int hi_units = std::max(lo_units, max_len / grid);

    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(params.count));
    for (int id = 0; id < params.count; ++id) {
        const int start = grid * rng.below(m / grid);
        const int len = grid * rng.range(lo_units, hi_units);
        arcs.push_back({id, start, (start + len) % m});
    }
    return ArcInstance(m, std::move(arcs));
}

IntervalInstance random_interval_instance(Rng& rng, const IntervalGenParams& params) {
    const int n = params.line_size;
    if (n < 1) throw UsageError("interval generation needs a line of size >= 1");
    const int max_len = std::max(1, params.max_len > 0 ? std::min(params.max_len, n) : n / 2);
    const int min_len = std::min(std::max(1, params.min_len), max_len);

    std::vector<Interval> intervals;
    intervals.reserve(static_cast<std::size_t>(params.count));
    for (int id = 0; id < params.count; ++id) {
        const int len = rng.range(min_len, max_len);
        const int start = rng.below(n - len + 1);
        intervals.push_back({id, start, start + len});
    }
    return IntervalInstance(n, std::move(intervals));
}

PresentationOrder random_order(Rng& rng, int n) {
    PresentationOrder order = identity_order(n);
    for (int i = n - 1; i > 0; --i)
        std::swap(order.ids[static_cast<std::size_t>(i)],
                  order.ids[static_cast<std::size_t>(rng.below(i + 1))]);
    return order;
}

}  // namespace ffarc
