#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ffarc {

// Thrown on malformed input text; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// Thrown when a caller breaks an operation's contract (bad order, bad pin,
// oversized instance, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Positions are integer cells. An arc on a circle of size M occupies the
// half-open cell set {start, start+1, ..., end-1} mod M; start >= end encodes
// wrap-around. An interval on a line occupies {start, ..., end-1} and may not
// wrap. Touching endpoints do not overlap.

struct Arc {
    int id = 0;
    int start = 0;
    int end = 0;

    bool operator==(const Arc&) const = default;
};

struct Interval {
    int id = 0;
    int start = 0;
    int end = 0;

    bool operator==(const Interval&) const = default;
};

// A set of circular arcs with ids 0..n-1. Every arc covers at least 1 and at
// most M-1 cells; an arc spanning the full circle is rejected.
class ArcInstance {
public:
    ArcInstance() = default;
    ArcInstance(int circle_size, std::vector<Arc> arcs);

    int circle_size() const noexcept { return circle_; }
    int size() const noexcept { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int id) const;
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    int length(int id) const;
    bool covers(int id, int pos) const;
    // True iff the cell set {start, ..., start+len-1} mod M meets the arc.
    bool overlaps_span(int id, int start, int len) const;
    bool overlaps(int a, int b) const;
    // True when the arc spans the boundary immediately before cut_point,
    // i.e. covers both cut_point-1 and cut_point. Severing the circle at
    // that boundary splits exactly these arcs.
    bool crosses(int id, int cut_point) const;

    bool operator==(const ArcInstance&) const = default;

private:
    int circle_ = 1;
    std::vector<Arc> arcs_;  // sorted; arcs_[i].id == i
};

// A set of line intervals with ids 0..n-1; start < end strictly.
class IntervalInstance {
public:
    IntervalInstance() = default;
    IntervalInstance(int line_size, std::vector<Interval> intervals);

    int line_size() const noexcept { return line_; }
    int size() const noexcept { return static_cast<int>(intervals_.size()); }
    const Interval& interval(int id) const;
    const std::vector<Interval>& intervals() const noexcept { return intervals_; }

    int length(int id) const;
    bool covers(int id, int pos) const;
    bool overlaps(int a, int b) const;

    bool operator==(const IntervalInstance&) const = default;

private:
    int line_ = 1;
    std::vector<Interval> intervals_;  // sorted; intervals_[i].id == i
};

using Instance = std::variant<ArcInstance, IntervalInstance>;

// The arrival permutation fed to the online algorithm.
struct PresentationOrder {
    std::vector<int> ids;

    int size() const noexcept { return static_cast<int>(ids.size()); }
    bool is_permutation_of(int n) const;

    bool operator==(const PresentationOrder&) const = default;
};

PresentationOrder identity_order(int n);
void require_permutation(const PresentationOrder& order, int n);

// Colors emitted by a run, position-aligned with a PresentationOrder.
struct ChromaticSequence {
    std::vector<int> colors;

    int size() const noexcept { return static_cast<int>(colors.size()); }
    // Highest color in the sequence; 0 when empty.
    int used() const;

    bool operator==(const ChromaticSequence&) const = default;
};

// Correspondence between source arcs and unfolded intervals. Arcs severed by
// the cut appear in split_pairs (left piece ends at the cut, right piece
// starts at it); all other arcs map one-to-one via passthrough.
struct UnfoldMapping {
    struct Split {
        int arc_id = 0;
        int left_id = 0;
        int right_id = 0;

        bool operator==(const Split&) const = default;
    };
    struct Pass {
        int arc_id = 0;
        int interval_id = 0;

        bool operator==(const Pass&) const = default;
    };

    int cut_point = 0;
    std::vector<Split> split_pairs;
    std::vector<Pass> passthrough;

    int source_count() const noexcept {
        return static_cast<int>(split_pairs.size() + passthrough.size());
    }
    int target_count() const noexcept {
        return static_cast<int>(2 * split_pairs.size() + passthrough.size());
    }

    bool operator==(const UnfoldMapping&) const = default;
};

// Text format (line-based, '\n'-terminated, '#' starts a comment line):
//   circle M          header for arc instances
//   line N            header for interval instances
//   arc <id> <s> <e>  one element per line
//   int <id> <s> <e>
// Orders and colorings are single lines: "order <id> ...", "colors <c> ...".
Instance parse_instance(std::string_view text);
std::string render_instance(const ArcInstance& instance);
std::string render_instance(const IntervalInstance& instance);
std::string render_instance(const Instance& instance);

PresentationOrder parse_order(std::string_view text);
std::string render_order(const PresentationOrder& order);

ChromaticSequence parse_colors(std::string_view text);
std::string render_colors(const ChromaticSequence& seq);

std::string render_mapping(const UnfoldMapping& mapping);

int element_count(const Instance& instance);
int domain_size(const Instance& instance);
bool is_arc_instance(const Instance& instance);
bool overlaps(const Instance& instance, int a, int b);

}  // namespace ffarc
