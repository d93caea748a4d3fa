#include "ffarc/model.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace ffarc {

namespace {

constexpr int kMaxDomain = 1000000;

int floor_mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

void check_ids_contiguous(const std::vector<int>& ids, const char* what) {
    std::vector<int> sorted(ids);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
        if (sorted[i] != i)
            throw UsageError(std::string(what) + " ids must be unique and contiguous 0..n-1");
    }
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long long parse_int(const std::string& tok, int line, const char* what) {
    long long v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || p != last)
        throw ParseError(line, std::string("expected integer for ") + what + ", got '" + tok + "'");
    return v;
}

}  // namespace

ArcInstance::ArcInstance(int circle_size, std::vector<Arc> arcs)
    : circle_(circle_size), arcs_(std::move(arcs)) {
    if (circle_ < 1) throw UsageError("circle size must be positive");
    std::vector<int> ids;
    ids.reserve(arcs_.size());
    for (const Arc& a : arcs_) ids.push_back(a.id);
    check_ids_contiguous(ids, "arc");
    std::sort(arcs_.begin(), arcs_.end(),
              [](const Arc& x, const Arc& y) { return x.id < y.id; });
    for (const Arc& a : arcs_) {
        if (a.start < 0 || a.start >= circle_ || a.end < 0 || a.end >= circle_)
            throw UsageError("arc endpoints must lie in [0, M)");
        if (a.start == a.end)
            throw UsageError("arc " + std::to_string(a.id) + " covers all " +
                             std::to_string(circle_) + " positions");
    }
}

const Arc& ArcInstance::arc(int id) const {
    if (id < 0 || id >= size()) throw UsageError("arc id out of range");
    return arcs_[static_cast<std::size_t>(id)];
}

int ArcInstance::length(int id) const {
    const Arc& a = arc(id);
    return floor_mod(a.end - a.start, circle_);
}

bool ArcInstance::covers(int id, int pos) const {
    const Arc& a = arc(id);
    pos = floor_mod(pos, circle_);
    if (a.start < a.end) return a.start <= pos && pos < a.end;
    return pos >= a.start || pos < a.end;  // wrap-around
}

bool ArcInstance::overlaps_span(int id, int start, int len) const {
    if (len <= 0) return false;
    const Arc& a = arc(id);
    start = floor_mod(start, circle_);
    // Two circular runs intersect iff one contains the other's start cell.
    if (covers(id, start)) return true;
    return floor_mod(a.start - start, circle_) < len;
}

bool ArcInstance::overlaps(int a, int b) const {
    if (a == b) {
        arc(a);
        return true;
    }
    return covers(a, arc(b).start) || covers(b, arc(a).start);
}

bool ArcInstance::crosses(int id, int cut_point) const {
    if (cut_point < 0 || cut_point >= circle_)
        throw UsageError("cut point must lie in [0, M)");
    return covers(id, cut_point) && covers(id, floor_mod(cut_point - 1, circle_));
}

IntervalInstance::IntervalInstance(int line_size, std::vector<Interval> intervals)
    : line_(line_size), intervals_(std::move(intervals)) {
    if (line_ < 1) throw UsageError("line size must be positive");
    std::vector<int> ids;
    ids.reserve(intervals_.size());
    for (const Interval& v : intervals_) ids.push_back(v.id);
    check_ids_contiguous(ids, "interval");
    std::sort(intervals_.begin(), intervals_.end(),
              [](const Interval& x, const Interval& y) { return x.id < y.id; });
    for (const Interval& v : intervals_) {
        if (v.start < 0 || v.end > line_ || v.start >= v.end)
            throw UsageError("interval " + std::to_string(v.id) +
                             " must satisfy 0 <= start < end <= N");
    }
}

const Interval& IntervalInstance::interval(int id) const {
    if (id < 0 || id >= size()) throw UsageError("interval id out of range");
    return intervals_[static_cast<std::size_t>(id)];
}

int IntervalInstance::length(int id) const {
    const Interval& v = interval(id);
    return v.end - v.start;
}

bool IntervalInstance::covers(int id, int pos) const {
    const Interval& v = interval(id);
    return v.start <= pos && pos < v.end;
}

bool IntervalInstance::overlaps(int a, int b) const {
    const Interval& x = interval(a);
    const Interval& y = interval(b);
    return std::max(x.start, y.start) < std::min(x.end, y.end);
}

bool PresentationOrder::is_permutation_of(int n) const {
    if (size() != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int id : ids) {
        if (id < 0 || id >= n || seen[static_cast<std::size_t>(id)]) return false;
        seen[static_cast<std::size_t>(id)] = 1;
    }
    return true;
}

PresentationOrder identity_order(int n) {
    PresentationOrder order;
    order.ids.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order.ids[static_cast<std::size_t>(i)] = i;
    return order;
}

void require_permutation(const PresentationOrder& order, int n) {
    if (!order.is_permutation_of(n))
        throw UsageError("order must be a permutation of 0..n-1 (n=" + std::to_string(n) + ")");
}

int ChromaticSequence::used() const {
    int best = 0;
    for (int c : colors) best = std::max(best, c);
    return best;
}

Instance parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;

    bool have_header = false;
    bool arc_kind = false;
    int domain = 0;
    std::vector<Arc> arcs;
    std::vector<Interval> intervals;
    std::unordered_set<int> ids;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty() || tok[0][0] == '#') continue;

        if (!have_header) {
            if ((tok[0] != "circle" && tok[0] != "line") || tok.size() != 2)
                throw ParseError(lineno, "expected header 'circle M' or 'line N'");
            long long v = parse_int(tok[1], lineno, "domain size");
            if (v < 1 || v > kMaxDomain)
                throw ParseError(lineno, "domain size out of range [1, " +
                                             std::to_string(kMaxDomain) + "]");
            arc_kind = tok[0] == "circle";
            domain = static_cast<int>(v);
            have_header = true;
            continue;
        }

        if (tok[0] == "arc" || tok[0] == "int") {
            bool is_arc = tok[0] == "arc";
            if (is_arc != arc_kind)
                throw ParseError(lineno, std::string("'") + tok[0] + "' element in a '" +
                                             (arc_kind ? "circle" : "line") + "' instance");
            if (tok.size() != 4)
                throw ParseError(lineno, "expected '" + tok[0] + " <id> <start> <end>'");
            long long id = parse_int(tok[1], lineno, "id");
            long long s = parse_int(tok[2], lineno, "start");
            long long e = parse_int(tok[3], lineno, "end");
            if (id < 0 || id > kMaxDomain) throw ParseError(lineno, "id out of range");
            if (!ids.insert(static_cast<int>(id)).second)
                throw ParseError(lineno, "duplicate id " + std::to_string(id));
            if (is_arc) {
                if (s < 0 || s >= domain || e < 0 || e >= domain)
                    throw ParseError(lineno, "arc endpoints must lie in [0, M)");
                if (s == e)
                    throw ParseError(lineno, "arc covers all " + std::to_string(domain) +
                                                 " positions");
                arcs.push_back({static_cast<int>(id), static_cast<int>(s), static_cast<int>(e)});
            } else {
                if (s < 0 || e > domain || s >= e)
                    throw ParseError(lineno, "interval must satisfy 0 <= start < end <= N");
                intervals.push_back(
                    {static_cast<int>(id), static_cast<int>(s), static_cast<int>(e)});
            }
            continue;
        }

        throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }

    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'circle' or 'line' header");

    const int n = static_cast<int>(ids.size());
    for (int i = 0; i < n; ++i) {
        if (!ids.count(i))
            throw ParseError(lineno, "element ids must be contiguous 0..n-1 (missing " +
                                         std::to_string(i) + ")");
    }

    if (arc_kind) return ArcInstance(domain, std::move(arcs));
    return IntervalInstance(domain, std::move(intervals));
}

std::string render_instance(const ArcInstance& instance) {
    std::ostringstream out;
    out << "circle " << instance.circle_size() << '\n';
    for (const Arc& a : instance.arcs())
        out << "arc " << a.id << ' ' << a.start << ' ' << a.end << '\n';
    return out.str();
}

std::string render_instance(const IntervalInstance& instance) {
    std::ostringstream out;
    out << "line " << instance.line_size() << '\n';
    for (const Interval& v : instance.intervals())
        out << "int " << v.id << ' ' << v.start << ' ' << v.end << '\n';
    return out.str();
}

std::string render_instance(const Instance& instance) {
    return std::visit([](const auto& inst) { return render_instance(inst); }, instance);
}

namespace {

std::vector<long long> parse_keyword_line(std::string_view text, const char* keyword) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok[0] != keyword)
            throw ParseError(lineno, std::string("expected '") + keyword + " ...' line");
        std::vector<long long> values;
        for (std::size_t i = 1; i < tok.size(); ++i)
            values.push_back(parse_int(tok[i], lineno, keyword));
        return values;
    }
    throw ParseError(lineno == 0 ? 1 : lineno, std::string("missing '") + keyword + "' line");
}

}  // namespace

PresentationOrder parse_order(std::string_view text) {
    PresentationOrder order;
    for (long long v : parse_keyword_line(text, "order")) {
        if (v < 0 || v > kMaxDomain) throw ParseError(1, "order id out of range");
        order.ids.push_back(static_cast<int>(v));
    }
    return order;
}

std::string render_order(const PresentationOrder& order) {
    std::ostringstream out;
    out << "order";
    for (int id : order.ids) out << ' ' << id;
    out << '\n';
    return out.str();
}

ChromaticSequence parse_colors(std::string_view text) {
    ChromaticSequence seq;
    for (long long v : parse_keyword_line(text, "colors")) {
        if (v < 1 || v > kMaxDomain) throw ParseError(1, "colors must be positive integers");
        seq.colors.push_back(static_cast<int>(v));
    }
    return seq;
}

std::string render_colors(const ChromaticSequence& seq) {
    std::ostringstream out;
    out << "colors";
    for (int c : seq.colors) out << ' ' << c;
    out << '\n';
    return out.str();
}

std::string render_mapping(const UnfoldMapping& mapping) {
    std::ostringstream out;
    for (const UnfoldMapping::Split& s : mapping.split_pairs)
        out << "split " << s.arc_id << " -> " << s.left_id << ' ' << s.right_id << '\n';
    for (const UnfoldMapping::Pass& p : mapping.passthrough)
        out << "keep " << p.arc_id << " -> " << p.interval_id << '\n';
    return out.str();
}

int element_count(const Instance& instance) {
    return std::visit([](const auto& inst) { return inst.size(); }, instance);
}

int domain_size(const Instance& instance) {
    if (const auto* arcs = std::get_if<ArcInstance>(&instance)) return arcs->circle_size();
    return std::get<IntervalInstance>(instance).line_size();
}

bool is_arc_instance(const Instance& instance) {
    return std::holds_alternative<ArcInstance>(instance);
}

bool overlaps(const Instance& instance, int a, int b) {
    return std::visit([&](const auto& inst) { return inst.overlaps(a, b); }, instance);
}

}  // namespace ffarc
