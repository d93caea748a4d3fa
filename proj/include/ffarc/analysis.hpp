#pragma once

#include "ffarc/model.hpp"

namespace ffarc {

// Per-position coverage counts. loads[p] is the number of elements covering
// cell p; argmin/argmax break ties toward the smallest position index.
struct LoadProfile {
    std::vector<int> loads;
    int min_load = 0;
    int max_load = 0;
    int argmin_point = 0;
    int argmax_point = 0;
};

LoadProfile load_profile(const ArcInstance& instance);
LoadProfile load_profile(const IntervalInstance& instance);
LoadProfile load_profile(const Instance& instance);

// Exact maximum clique of the intersection graph. The witness is the
// lexicographically smallest maximum clique as a sorted id set, so reports
// are reproducible when several maximum cliques exist.
struct CliqueReport {
    int omega = 0;
    std::vector<int> witness;  // sorted ids, |witness| == omega
};

inline constexpr int kDefaultCliqueLimit = 25;

// Branch-and-bound with a greedy-coloring upper bound; refuses instances
// larger than `limit` rather than falling back to a heuristic.
CliqueReport max_clique(const ArcInstance& instance, int limit = kDefaultCliqueLimit);
CliqueReport max_clique(const IntervalInstance& instance, int limit = kDefaultCliqueLimit);
CliqueReport max_clique(const Instance& instance, int limit = kDefaultCliqueLimit);

}  // namespace ffarc
