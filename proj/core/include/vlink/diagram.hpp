#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vlink {

// refusal because the input is outside an operation's domain (CLI exit 2)
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// refusal because a resource cap would be exceeded (CLI exit 3)
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ChordId = int;

struct EndpointPos {
    int circle = 0;
    int pos = 0;
    bool operator==(const EndpointPos&) const = default;
    auto operator<=>(const EndpointPos&) const = default;
};

// Signed chord diagram: circles carry chord endpoints in cyclic order; every
// chord has exactly two endpoints and a sign.  Chord ids are dense, numbered
// by first occurrence.  Arcs are the base segments between consecutive
// endpoints, identified by (circle, start position); a chord-free circle is a
// single closed arc at position 0.
class SignedChordDiagram {
public:
    SignedChordDiagram() = default;
    // pre: chord ids dense 0..c-1 by first occurrence, each id appears exactly twice
    SignedChordDiagram(std::vector<std::vector<ChordId>> circles, std::vector<int> signs);

    int num_chords() const { return static_cast<int>(signs_.size()); }
    int num_circles() const { return static_cast<int>(circles_.size()); }
    const std::vector<std::vector<ChordId>>& circles() const { return circles_; }
    const std::vector<ChordId>& circle(int ci) const { return circles_[ci]; }
    int circle_size(int ci) const { return static_cast<int>(circles_[ci].size()); }
    int sign(ChordId ch) const { return signs_[ch]; }
    const std::vector<int>& signs() const { return signs_; }
    const std::array<EndpointPos, 2>& ends(ChordId ch) const { return ends_[ch]; }
    int writhe() const;

    // arcs: circle with n>=1 endpoints owns arcs (ci,0..n-1); chord-free circle owns one closed arc
    int arc_count() const { return total_arcs_; }
    int arc_id(int ci, int pos) const { return arc_offset_[ci] + pos; }
    EndpointPos arc_start(int arc) const;
    int in_arc(const EndpointPos& p) const;   // arc whose head is p
    int out_arc(const EndpointPos& p) const;  // arc whose tail is p

    bool operator==(const SignedChordDiagram&) const = default;

private:
    std::vector<std::vector<ChordId>> circles_;
    std::vector<int> signs_;
    std::vector<std::array<EndpointPos, 2>> ends_;
    std::vector<int> arc_offset_;
    int total_arcs_ = 0;
};

// per chord: which occurrence (0 = first) is the over endpoint of the arrow
struct GaussArrows {
    std::vector<int> over_occurrence;
    bool operator==(const GaussArrows&) const = default;
};

struct GaussDiagram {
    SignedChordDiagram diagram;
    GaussArrows arrows;
    EndpointPos over_end(ChordId ch) const {
        return diagram.ends(ch)[arrows.over_occurrence[ch]];
    }
    EndpointPos under_end(ChordId ch) const {
        return diagram.ends(ch)[1 - arrows.over_occurrence[ch]];
    }
};

// marks on the base circles: count per gap, where gap g sits immediately
// before the endpoint at position g; a circle without endpoints has one gap
struct CircleMarks {
    std::vector<std::vector<int>> gap_counts;  // per circle
    bool any() const {
        for (const auto& g : gap_counts)
            for (int c : g)
                if (c) return true;
        return false;
    }
    int total() const {
        int t = 0;
        for (const auto& g : gap_counts)
            for (int c : g) t += c;
        return t;
    }
    bool operator==(const CircleMarks&) const = default;
};

struct TwistedGaussDiagram {
    GaussDiagram gauss;
    CircleMarks marks;
};

SignedChordDiagram blunt(const GaussDiagram& g);
GaussDiagram forget_marks(const TwistedGaussDiagram& t);

enum class Level { signed_chords, gauss, twisted_signed, twisted_gauss };
std::string level_text(Level l);

// validated diagram at its richest parsed level
struct Document {
    std::string name;
    SignedChordDiagram diagram;
    std::optional<GaussArrows> arrows;
    CircleMarks marks;

    Level level() const {
        bool m = marks.any();
        if (arrows) return m ? Level::twisted_gauss : Level::gauss;
        return m ? Level::twisted_signed : Level::signed_chords;
    }
    GaussDiagram gauss() const {
        if (!arrows) throw DomainError("operation requires over/under arrow data");
        return GaussDiagram{diagram, *arrows};
    }
};

// ---- raw (unvalidated) input --------------------------------------------

struct RawEndpoint {
    long label = 0;
    int sign = 0;  // +1 / -1 / 0 = not written
    int tag = 0;   // 0 = none, 1 = over, 2 = under
};

struct RawCircle {
    std::vector<RawEndpoint> endpoints;
    std::vector<int> marks_before;  // gap index per mark token
};

struct RawDiagram {
    std::string name;
    std::vector<RawCircle> circles;
};

struct ValidationError {
    std::string message;
    int circle = -1;  // -1 = whole diagram
    int position = -1;
};

struct ValidationResult {
    std::optional<Document> document;
    std::vector<ValidationError> errors;
    bool ok() const { return document.has_value(); }
};

ValidationResult validate(const RawDiagram& raw);

// ---- states and resolutions ---------------------------------------------

// marker bit vector: bit k set <=> marker of chord k is -1
using State = std::uint32_t;

inline int marker(State s, ChordId ch) { return (s >> ch) & 1u ? -1 : 1; }
inline int count_negative(State s) { return __builtin_popcount(s); }

struct ResolvedCurve {
    // traversal per component: (arc id, direction +1/-1), component order =
    // ascending smallest contained arc, traversal starts at that arc forward
    std::vector<std::vector<std::pair<int, int>>> components;
    std::vector<int> comp_of_arc;
    int count() const { return static_cast<int>(components.size()); }
};

ResolvedCurve resolve(const SignedChordDiagram& d, State s);

// reusable fast loop counter for state sums
class ComponentCounter {
public:
    explicit ComponentCounter(const SignedChordDiagram& d);
    int count(State s);

private:
    int arcs_ = 0;
    int free_loops_ = 0;
    // per chord: arc-end slots (end encoding: arc*2 = tail, arc*2+1 = head)
    struct ChordSlots {
        int head_in_p, tail_out_p, head_in_q, tail_out_q;
        int sign;
    };
    std::vector<ChordSlots> slots_;
    std::vector<int> partner_;
    std::vector<char> visited_arc_;
    std::vector<int> chord_arcs_;  // arcs on circles with endpoints
};

}  // namespace vlink
