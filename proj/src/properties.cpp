#include "ffarc/properties.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include "ffarc/analysis.hpp"

namespace ffarc {

DominanceReport check_lemma1(const IntervalInstance& instance, const PresentationOrder& order,
                             int pause_index, std::optional<int> delta_opt,
                             bool strict_extremal) {
    require_permutation(order, instance.size());
    const int n = instance.size();
    if (pause_index < 0 || pause_index + 2 > n)
        throw UsageError("pause index must leave room for the pinned pair");

    const int left_id = order.ids[static_cast<std::size_t>(pause_index)];
    const int right_id = order.ids[static_cast<std::size_t>(pause_index + 1)];
    if (instance.overlaps(left_id, right_id))
        throw UsageError("the pinned pair overlaps; the pause process requires disjoint pieces");

    if (strict_extremal) {
        int min_start_id = -1;
        int max_end_id = -1;
        bool min_unique = true;
        bool max_unique = true;
        for (const Interval& v : instance.intervals()) {
            if (min_start_id < 0 || v.start < instance.interval(min_start_id).start) {
                min_start_id = v.id;
                min_unique = true;
            } else if (v.start == instance.interval(min_start_id).start) {
                min_unique = false;
            }
            if (max_end_id < 0 || v.end > instance.interval(max_end_id).end) {
                max_end_id = v.id;
                max_unique = true;
            } else if (v.end == instance.interval(max_end_id).end) {
                max_unique = false;
            }
        }
        const bool pair_is_extremal =
            (left_id == min_start_id && right_id == max_end_id) ||
            (left_id == max_end_id && right_id == min_start_id);
        if (!min_unique || !max_unique || !pair_is_extremal)
            throw UsageError("strict mode: pinned pair must be the unique extremal intervals");
    }

    const int omega = max_clique(instance).omega;
    const int delta = delta_opt.value_or(8 * omega + 1);
    if (delta <= 8 * omega)
        throw UsageError("delta must exceed 8*omega (omega=" + std::to_string(omega) + ")");

    const FFRun nonpaused = ff_color(instance, order);
    const std::array<PinnedColor, 2> pins{{{left_id, delta}, {right_id, delta}}};
    const FFRun paused = ff_paused(instance, order, pause_index, pins);

    DominanceReport report;
    report.order = order;
    report.pause_index = pause_index;
    report.delta = delta;
    report.omega = omega;
    report.paused = paused.colors;
    report.nonpaused = nonpaused.colors;
    for (int j = pause_index + 2; j < n; ++j) {
        const int x = paused.colors.colors[static_cast<std::size_t>(j)];
        const int y = nonpaused.colors.colors[static_cast<std::size_t>(j)];
        if (x > y || y > 8 * omega) report.violations.push_back({j, x, y});
    }
    return report;
}

ChromaticSequence construction_expected_colors(int w) {
    std::vector<int> x{1, 1};
    for (int c = 2; c <= w; ++c) x.push_back(c);
    for (int c = 2; c <= w - 1; ++c) x.push_back(c);
    for (int c = 2; c <= w - 2; ++c) x.push_back(c);
    x.push_back(w + 1);
    return {std::move(x)};
}

Construction build_construction(int w) {
    if (w < 3) throw UsageError("construction requires w >= 3");
    const int m = 8 * w;

    // Layout clockwise from the cut at 0: the special arc straddles the cut;
    // the c-family sits just right of it, the shared a-clique window further
    // right, and the b-family just left of it. a_w runs from the a-window all
    // the way back to the special arc's left part so the merged color is
    // forced past w.
    std::vector<Arc> arcs;
    arcs.push_back({0, 1, 8});                                          // c1
    for (int k = 2; k <= w - 1; ++k) arcs.push_back({k - 1, 6, 8});     // a2..a_{w-1}
    arcs.push_back({w - 1, 6, m - 1});                                  // a_w
    for (int k = 2; k <= w - 1; ++k) arcs.push_back({w - 2 + k, 1, 4});  // c2..c_{w-1}
    for (int k = 1; k <= w - 2; ++k)
        arcs.push_back({2 * w - 3 + k, m - 4, m - 1});                  // b1..b_{w-2}
    const int special = 3 * w - 4;
    arcs.push_back({special, m - 2, 2});

    Construction c{ArcInstance(m, std::move(arcs)), {}, construction_expected_colors(w),
                   special, 0};

    // <b1, c1, a2..aw, c2..c_{w-1}, b2..b_{w-2}, special>
    c.order.ids.push_back(2 * w - 2);
    c.order.ids.push_back(0);
    for (int id = 1; id <= w - 1; ++id) c.order.ids.push_back(id);
    for (int id = w; id <= 2 * w - 3; ++id) c.order.ids.push_back(id);
    for (int id = 2 * w - 1; id <= 3 * w - 5; ++id) c.order.ids.push_back(id);
    c.order.ids.push_back(special);
    return c;
}

std::string_view bound_name(BoundName name) {
    switch (name) {
        case BoundName::raman8w: return "raman8w";
        case BoundName::prop1: return "prop1";
        case BoundName::theorem8wK: return "theorem8wK";
        case BoundName::corollary9w: return "corollary9w";
    }
    return "?";
}

namespace {

BoundVerdict make_verdict(BoundName name, int omega, int k, int used, int bound) {
    return {name, omega, k, used, bound, used <= bound};
}

}  // namespace

std::vector<BoundVerdict> check_bounds(const ArcInstance& instance,
                                       const PresentationOrder& order, int clique_limit) {
    const int used = ff_color(instance, order).colors_used();
    const int omega = max_clique(instance, clique_limit).omega;
    const int k = load_profile(instance).min_load;

    std::vector<BoundVerdict> verdicts;
    if (k == 1)
        verdicts.push_back(make_verdict(BoundName::prop1, omega, k, used, 8 * omega + 1));
    verdicts.push_back(make_verdict(BoundName::theorem8wK, omega, k, used, 8 * omega + k));
    verdicts.push_back(make_verdict(BoundName::corollary9w, omega, k, used, 9 * omega));
    return verdicts;
}

std::vector<BoundVerdict> check_bounds(const IntervalInstance& instance,
                                       const PresentationOrder& order, int clique_limit) {
    const int used = ff_color(instance, order).colors_used();
    const int omega = max_clique(instance, clique_limit).omega;
    return {make_verdict(BoundName::raman8w, omega, 0, used, 8 * omega)};
}

std::vector<BoundVerdict> check_bounds(const Instance& instance, const PresentationOrder& order,
                                       int clique_limit) {
    return std::visit(
        [&](const auto& inst) { return check_bounds(inst, order, clique_limit); }, instance);
}

std::string render_verdict(const BoundVerdict& v) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "BOUND %s omega=%d K=%d used=%d bound=%d %s",
                  std::string(bound_name(v.name)).c_str(), v.omega, v.k, v.colors_used,
                  v.bound_value, v.satisfied ? "PASS" : "FAIL");
    return buf;
}

std::string render_violations(const DominanceReport& report) {
    std::ostringstream out;
    for (const DominanceReport::Violation& v : report.violations)
        out << "VIOLATION j=" << v.position + 1 << " paused=" << v.paused_color
            << " nonpaused=" << v.nonpaused_color << '\n';
    return out.str();
}

}  // namespace ffarc
