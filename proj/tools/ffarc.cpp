// ffarc — online First-Fit coloring experiments on interval and circular-arc
// instances: single runs, structure analysis, cut-and-unfold, pause/dominance
// checks, adversarial constructions, and seeded bound-probing campaigns.

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ffarc/analysis.hpp"
#include "ffarc/campaign.hpp"
#include "ffarc/ffengine.hpp"
#include "ffarc/generator.hpp"
#include "ffarc/model.hpp"
#include "ffarc/properties.hpp"
#include "ffarc/transform.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ffarc::UsageError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ffarc::UsageError("cannot write file: " + path);
    out << content;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ffarc::UsageError(std::string("invalid ") + what + ": '" + text + "'");
    }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("FFARC_SEED")) return parse_u64(env, "FFARC_SEED");
    return 0;
}

// Order specs: "given" (ascending ids), "seed:<n>" (seeded shuffle), a path
// to a file holding an "order ..." line, or that line given inline.
ffarc::PresentationOrder resolve_order(const std::string& spec, int n) {
    if (spec.empty() || spec == "given") return ffarc::identity_order(n);
    if (spec.rfind("seed:", 0) == 0) {
        ffarc::Rng rng(parse_u64(spec.substr(5), "order seed"));
        return ffarc::random_order(rng, n);
    }
    if (std::filesystem::exists(spec)) return ffarc::parse_order(slurp(spec));
    std::string line = spec;
    if (line.rfind("order", 0) != 0) line = "order " + line;
    return ffarc::parse_order(line + "\n");
}

int cmd_run(const std::string& instance_path, const std::string& order_spec, int clique_limit) {
    const ffarc::Instance instance = ffarc::parse_instance(slurp(instance_path));
    const ffarc::PresentationOrder order =
        resolve_order(order_spec, ffarc::element_count(instance));

    const ffarc::FFRun run = ffarc::ff_color(instance, order);
    const auto verdicts = ffarc::check_bounds(instance, order, clique_limit);

    std::cout << ffarc::render_colors(run.colors);
    const int omega = verdicts.empty() ? 0 : verdicts.front().omega;
    std::cout << "used=" << run.colors_used() << " omega=" << omega << '\n';
    bool all_ok = true;
    for (const ffarc::BoundVerdict& v : verdicts) {
        std::cout << ffarc::render_verdict(v) << '\n';
        all_ok = all_ok && v.satisfied;
    }
    return all_ok ? 0 : kExitFail;
}

int cmd_probe(const ffarc::ProbeParams& params, const std::string& csv_path) {
    const ffarc::ProbeResult result = ffarc::run_probe(params);
    const std::string csv = ffarc::probe_csv(result);
    if (csv_path.empty())
        std::cout << csv;
    else
        spill(csv_path, csv);
    std::cerr << "probe: " << result.rows.size() << " rows, "
              << (result.any_fail ? "FAIL" : "all bounds satisfied") << '\n';
    return result.any_fail ? kExitFail : 0;
}

int cmd_lemma1(const std::string& instance_path, const std::string& order_spec, int pause_index,
               int delta, bool strict) {
    const ffarc::Instance parsed = ffarc::parse_instance(slurp(instance_path));
    const auto* intervals = std::get_if<ffarc::IntervalInstance>(&parsed);
    if (!intervals) throw ffarc::UsageError("lemma1 expects an interval instance");
    const ffarc::PresentationOrder order = resolve_order(order_spec, intervals->size());

    const ffarc::DominanceReport report = ffarc::check_lemma1(
        *intervals, order, pause_index,
        delta > 0 ? std::optional<int>(delta) : std::nullopt, strict);
    std::cout << "LEMMA1 n=" << intervals->size() << " omega=" << report.omega
              << " pause=" << report.pause_index << " delta=" << report.delta
              << " violations=" << report.violations.size()
              << (report.passed() ? " PASS" : " FAIL") << '\n';
    std::cout << ffarc::render_violations(report);
    return report.passed() ? 0 : kExitFail;
}

int cmd_construct(int w, std::string out_prefix) {
    const ffarc::Construction c = ffarc::build_construction(w);
    if (out_prefix.empty()) out_prefix = "construction_w" + std::to_string(w);

    std::ostringstream instance_text;
    instance_text << "# adversarial instance, omega=" << w << ", First-Fit uses " << w + 1
                  << " colors on the shipped order\n"
                  << "# roles: c1=0, a2..aw=1.." << w - 1 << ", c2..c_(w-1)=" << w << ".."
                  << 2 * w - 3 << ", b1..b_(w-2)=" << 2 * w - 2 << ".." << 3 * w - 5
                  << ", cut-crossing arc=" << c.special_id << "\n"
                  << ffarc::render_instance(c.instance);
    spill(out_prefix + ".instance", instance_text.str());
    spill(out_prefix + ".order", ffarc::render_order(c.order));
    spill(out_prefix + ".colors", ffarc::render_colors(c.expected));

    std::cout << "construction w=" << w << " arcs=" << c.instance.size()
              << " special=" << c.special_id << " cut=" << c.cut_point << '\n';
    for (const char* ext : {".instance", ".order", ".colors"})
        std::cout << "wrote " << out_prefix << ext << '\n';
    return 0;
}

int cmd_analyze(const std::string& instance_path, int clique_limit) {
    const ffarc::Instance instance = ffarc::parse_instance(slurp(instance_path));
    const ffarc::LoadProfile profile = ffarc::load_profile(instance);
    const ffarc::CliqueReport clique = ffarc::max_clique(instance, clique_limit);

    std::cout << "kind=" << (ffarc::is_arc_instance(instance) ? "circle" : "line")
              << " n=" << ffarc::element_count(instance)
              << " size=" << ffarc::domain_size(instance) << '\n';
    std::cout << "omega=" << clique.omega << " max_load=" << profile.max_load
              << " min_load=" << profile.min_load << " argmin=" << profile.argmin_point
              << " argmax=" << profile.argmax_point << '\n';
    std::cout << "witness";
    for (int id : clique.witness) std::cout << ' ' << id;
    std::cout << '\n';
    return 0;
}

int cmd_unfold(const std::string& instance_path, const std::string& cut_spec,
               const std::string& out_path, const std::string& order_spec,
               const std::string& order_out_path) {
    const ffarc::Instance parsed = ffarc::parse_instance(slurp(instance_path));
    const auto* arcs = std::get_if<ffarc::ArcInstance>(&parsed);
    if (!arcs) throw ffarc::UsageError("unfold expects a circular-arc instance");

    int cut = 0;
    if (cut_spec == "auto")
        cut = ffarc::auto_cut_point(*arcs);
    else
        cut = static_cast<int>(parse_u64(cut_spec, "cut point"));

    const ffarc::UnfoldResult result = ffarc::unfold(*arcs, cut);
    std::cout << "cut=" << cut << " K=" << result.mapping.split_pairs.size()
              << " intervals=" << result.instance.size() << '\n';
    std::cout << ffarc::render_mapping(result.mapping);
    if (!out_path.empty()) spill(out_path, ffarc::render_instance(result.instance));
    if (!order_out_path.empty()) {
        const ffarc::PresentationOrder order = resolve_order(order_spec, arcs->size());
        spill(order_out_path, ffarc::render_order(ffarc::expand_order(order, result.mapping)));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"First-Fit coloring experiments on interval and circular-arc instances"};
    app.require_subcommand(1);

    std::string instance_path;
    std::string order_spec = "given";
    std::string cut_spec = "auto";
    std::string csv_path;
    std::string out_path;
    std::string order_out_path;
    std::string out_prefix;
    std::string kind = "arc";
    std::optional<std::uint64_t> seed_flag;
    int clique_limit = ffarc::kDefaultCliqueLimit;
    int w = 3;
    int pause_index = 0;
    int delta = 0;
    bool strict = false;
    ffarc::ProbeParams probe;

    CLI::App* run = app.add_subcommand("run", "color one instance and check the bounds");
    run->add_option("--instance", instance_path, "instance file")->required();
    run->add_option("--order", order_spec, "given | seed:<n> | file | inline order line");
    run->add_option("--clique-limit", clique_limit, "exact clique search size limit");

    CLI::App* probe_cmd = app.add_subcommand("probe", "seeded bound-probing campaign (CSV)");
    probe_cmd->add_option("--kind", kind, "arc | interval")
        ->check(CLI::IsMember({"arc", "interval"}));
    probe_cmd->add_option("--n", probe.n, "elements per instance");
    probe_cmd->add_option("--M,--domain", probe.domain, "circle/line size");
    probe_cmd->add_option("--trials", probe.trials, "number of random (instance, order) trials");
    probe_cmd->add_flag("--exhaustive", probe.exhaustive, "sweep all n! orders of one instance");
    probe_cmd->add_option("--seed", seed_flag, "campaign seed (fallback: FFARC_SEED, then 0)");
    probe_cmd->add_option("--jobs", probe.jobs, "worker count (1 = serial reference)");
    probe_cmd->add_option("--csv", csv_path, "write CSV here instead of stdout");

    CLI::App* lemma1 = app.add_subcommand("lemma1", "pause/non-pause dominance check");
    lemma1->add_option("--instance", instance_path, "interval instance file")->required();
    lemma1->add_option("--order", order_spec, "given | seed:<n> | file | inline order line");
    lemma1->add_option("--pause", pause_index, "steps completed before the pinned pair")
        ->required();
    lemma1->add_option("--delta", delta, "pinned color (default 8*omega+1)");
    lemma1->add_flag("--strict", strict, "require the pair to be the unique extremal intervals");

    CLI::App* construct = app.add_subcommand("construct", "write the w+1-color adversarial instance");
    construct->add_option("--w", w, "clique size (>= 3)")->required();
    construct->add_option("--out", out_prefix, "output prefix (default construction_w<w>)");

    CLI::App* analyze = app.add_subcommand("analyze", "load profile and exact maximum clique");
    analyze->add_option("--instance", instance_path, "instance file")->required();
    analyze->add_option("--clique-limit", clique_limit, "exact clique search size limit");

    CLI::App* unfold = app.add_subcommand("unfold", "cut a circular instance and unfold it");
    unfold->add_option("--instance", instance_path, "circular-arc instance file")->required();
    unfold->add_option("--cut", cut_spec, "cut position or 'auto'");
    unfold->add_option("--out", out_path, "write the unfolded interval instance here");
    unfold->add_option("--order", order_spec, "source order to expand across the cut");
    unfold->add_option("--order-out", order_out_path, "write the expanded order here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*run) return cmd_run(instance_path, order_spec, clique_limit);
        if (*probe_cmd) {
            probe.kind = kind == "arc" ? ffarc::ProbeKind::arc : ffarc::ProbeKind::interval;
            probe.seed = resolve_seed(seed_flag);
            return cmd_probe(probe, csv_path);
        }
        if (*lemma1) return cmd_lemma1(instance_path, order_spec, pause_index, delta, strict);
        if (*construct) return cmd_construct(w, out_prefix);
        if (*analyze) return cmd_analyze(instance_path, clique_limit);
        if (*unfold)
            return cmd_unfold(instance_path, cut_spec, out_path, order_spec, order_out_path);
    } catch (const ffarc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ffarc::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
