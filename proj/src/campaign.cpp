#include "ffarc/campaign.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "ffarc/analysis.hpp"
#include "ffarc/parallel.hpp"
#include "ffarc/properties.hpp"

namespace ffarc {

namespace {

constexpr int kProbeCliqueLimit = 25;

void validate(const ProbeParams& p) {
    if (p.n < 0 || p.n > kProbeCliqueLimit)
        throw UsageError("probe requires 0 <= n <= " + std::to_string(kProbeCliqueLimit) +
                         " for exact omega");
    if (p.domain < 2) throw UsageError("probe domain must be >= 2");
    if (p.jobs < 1) throw UsageError("jobs must be >= 1");
    if (p.exhaustive && p.trials > 0)
        throw UsageError("choose either --trials or --exhaustive, not both");
    if (!p.exhaustive && p.trials <= 0)
        throw UsageError("probe needs --trials > 0 or --exhaustive");
    if (p.exhaustive && p.n > 8)
        throw UsageError("exhaustive sweeps are refused for n > 8 (n! orders)");
}

Instance generate_instance(Rng& rng, const ProbeParams& p) {
    if (p.kind == ProbeKind::arc) return random_arc_instance(rng, probe_arc_params(p.n, p.domain));
    return random_interval_instance(rng, probe_interval_params(p.n, p.domain));
}

ProbeRow evaluate(const Instance& instance, const PresentationOrder& order,
                  std::uint64_t seed, long long order_index, const ProbeParams& p) {
    ProbeRow row;
    row.seed = seed;
    row.order_index = order_index;
    row.n = p.n;
    row.domain = p.domain;
    for (const BoundVerdict& v : check_bounds(instance, order, kProbeCliqueLimit)) {
        row.omega = v.omega;
        row.k = v.k;
        row.colors_used = v.colors_used;
        switch (v.name) {
            case BoundName::raman8w: row.verdict_8w = v.satisfied ? 1 : 0; break;
            case BoundName::theorem8wK: row.verdict_8wk = v.satisfied ? 1 : 0; break;
            case BoundName::corollary9w: row.verdict_9w = v.satisfied ? 1 : 0; break;
            case BoundName::prop1:
                // Same ceiling as theorem8wK at K=1; not a CSV column.
                if (!v.satisfied) row.verdict_8wk = 0;
                break;
        }
    }
    row.max_ratio = row.omega > 0 ? static_cast<double>(row.colors_used) / row.omega : 0.0;
    return row;
}

ProbeResult run_rows(const ProbeParams& p, int jobs) {
    validate(p);
    ProbeResult result;
    result.params = p;

    if (p.exhaustive) {
        Rng rng(mix_seed(p.seed, 0));
        const Instance instance = generate_instance(rng, p);
        std::vector<PresentationOrder> orders;
        PresentationOrder order = identity_order(p.n);
        do {
            orders.push_back(order);
        } while (std::next_permutation(order.ids.begin(), order.ids.end()));
        result.rows.resize(orders.size());
        for_each_index(static_cast<long long>(orders.size()), jobs, [&](long long i) {
            result.rows[static_cast<std::size_t>(i)] =
                evaluate(instance, orders[static_cast<std::size_t>(i)], p.seed, i, p);
        });
    } else {
        result.rows.resize(static_cast<std::size_t>(p.trials));
        for_each_index(p.trials, jobs, [&](long long i) {
            const std::uint64_t trial_seed = mix_seed(p.seed, static_cast<std::uint64_t>(i) + 1);
            Rng rng(trial_seed);
            const Instance instance = generate_instance(rng, p);
            const PresentationOrder order = random_order(rng, p.n);
            result.rows[static_cast<std::size_t>(i)] = evaluate(instance, order, trial_seed, i, p);
        });
    }

    for (const ProbeRow& row : result.rows)
        if (row.verdict_8w == 0 || row.verdict_8wk == 0 || row.verdict_9w == 0)
            result.any_fail = true;
    return result;
}

const char* verdict_str(int v) { return v < 0 ? "NA" : (v == 0 ? "FAIL" : "PASS"); }

}  // namespace

ProbeResult run_probe(const ProbeParams& params) {
    if (params.jobs <= 1) return run_probe_serial(params);
    return run_rows(params, params.jobs);
}

ProbeResult run_probe_serial(const ProbeParams& params) { return run_rows(params, 1); }

std::string probe_csv(const ProbeResult& result) {
    std::ostringstream out;
    out << kProbeCsvHeader << '\n';
    char buf[192];
    for (const ProbeRow& r : result.rows) {
        std::snprintf(buf, sizeof buf, "%llu,%lld,%d,%d,%d,%d,%d,%s,%s,%s,%.4f",
                      static_cast<unsigned long long>(r.seed), r.order_index, r.n, r.domain,
                      r.omega, r.k, r.colors_used, verdict_str(r.verdict_8w),
                      verdict_str(r.verdict_8wk), verdict_str(r.verdict_9w), r.max_ratio);
        out << buf << '\n';
    }
    return out.str();
}

ArcGenParams probe_arc_params(int n, int domain) {
    ArcGenParams params;
    params.count = n;
    params.circle_size = domain;
    params.grid = domain % 2 == 0 ? 2 : 1;
    params.min_len = params.grid;
    params.max_len = std::max(params.grid, domain / 2);
    return params;
}

IntervalGenParams probe_interval_params(int n, int domain) {
    IntervalGenParams params;
    params.count = n;
    params.line_size = domain;
    params.min_len = 1;
    params.max_len = std::max(2, domain / 3);
    return params;
}

}  // namespace ffarc
