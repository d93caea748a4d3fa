#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ffarc/generator.hpp"
#include "ffarc/model.hpp"

namespace ffarc {

enum class ProbeKind { arc, interval };

// A probe campaign: either `trials` random (instance, order) pairs, or an
// exhaustive sweep over all n! orders of one seeded instance (n <= 8).
struct ProbeParams {
    ProbeKind kind = ProbeKind::arc;
    int n = 6;
    int domain = 36;
    std::uint64_t seed = 0;
    int trials = 0;
    bool exhaustive = false;
    int jobs = 1;
};

// Verdict columns: 1 pass, 0 fail, -1 not applicable for the instance kind.
struct ProbeRow {
    std::uint64_t seed = 0;
    long long order_index = 0;
    int n = 0;
    int domain = 0;
    int omega = 0;
    int k = 0;
    int colors_used = 0;
    int verdict_8w = -1;
    int verdict_8wk = -1;
    int verdict_9w = -1;
    double max_ratio = 0.0;

    bool operator==(const ProbeRow&) const = default;
};

struct ProbeResult {
    ProbeParams params;
    std::vector<ProbeRow> rows;
    bool any_fail = false;
};

inline constexpr std::string_view kProbeCsvHeader =
    "seed,order_index,n,M,omega,K,colors_used,bound_8w,bound_8wK,bound_9w,max_ratio";

// Dispatches on params.jobs: 1 runs the serial reference, more spreads trials
// over an OpenMP team. Rows are keyed by trial index, so output is
// byte-identical for every job count.
ProbeResult run_probe(const ProbeParams& params);
// Plain single-thread loop, kept as the reference the parallel path is
// checked against.
ProbeResult run_probe_serial(const ProbeParams& params);

std::string probe_csv(const ProbeResult& result);

// Instance generation used by probe trials (exposed for replay: feed the
// logged per-trial seed back through an Rng).
ArcGenParams probe_arc_params(int n, int domain);
IntervalGenParams probe_interval_params(int n, int domain);

}  // namespace ffarc
