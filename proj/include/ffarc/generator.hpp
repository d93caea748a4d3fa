#pragma once

#include <cstdint>

#include "ffarc/model.hpp"

namespace ffarc {

// Deterministic splitmix64 stream. Hand-rolled so seeded campaigns replay
// byte-identically across compilers and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // Uniform in [0, n); returns 0 for n <= 0.
    int below(int n);
    // Uniform in [lo, hi] inclusive.
    int range(int lo, int hi);

private:
    std::uint64_t state_;
};

// Derives an independent per-trial seed from a master seed and trial index,
// so trials are reproducible regardless of execution order.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream);

struct ArcGenParams {
    int count = 0;
    int circle_size = 36;
    int min_len = 2;
    int max_len = 0;  // 0: circle_size - grid
    // Endpoints snap to multiples of `grid`. With grid 2 no arc endpoint ever
    // sits on an odd position, so a minimum-load cut position free of arc
    // starts always exists (cut points in general position).
    int grid = 2;
};

ArcInstance random_arc_instance(Rng& rng, const ArcGenParams& params);

struct IntervalGenParams {
    int count = 0;
    int line_size = 36;
    int min_len = 1;
    int max_len = 0;  // 0: line_size / 2, at least 1
};

IntervalInstance random_interval_instance(Rng& rng, const IntervalGenParams& params);

PresentationOrder random_order(Rng& rng, int n);

}  // namespace ffarc
