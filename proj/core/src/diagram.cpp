#include "vlink/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace vlink {

SignedChordDiagram::SignedChordDiagram(std::vector<std::vector<ChordId>> circles,
                                       std::vector<int> signs)
    : circles_(std::move(circles)), signs_(std::move(signs)) {
    ends_.assign(signs_.size(), {});
    std::vector<int> seen(signs_.size(), 0);
    arc_offset_.resize(circles_.size());
    for (int ci = 0; ci < static_cast<int>(circles_.size()); ++ci) {
        arc_offset_[ci] = total_arcs_;
        const auto& circ = circles_[ci];
        total_arcs_ += circ.empty() ? 1 : static_cast<int>(circ.size());
        for (int pos = 0; pos < static_cast<int>(circ.size()); ++pos) {
            ChordId ch = circ[pos];
            if (ch < 0 || ch >= num_chords() || seen[ch] > 1)
                throw std::logic_error("malformed chord diagram");
            ends_[ch][seen[ch]++] = EndpointPos{ci, pos};
        }
    }
    for (int ch = 0; ch < num_chords(); ++ch)
        if (seen[ch] != 2) throw std::logic_error("chord without two endpoints");
}

int SignedChordDiagram::writhe() const {
    return std::accumulate(signs_.begin(), signs_.end(), 0);
}

EndpointPos SignedChordDiagram::arc_start(int arc) const {
    int ci = 0;
    while (ci + 1 < static_cast<int>(arc_offset_.size()) && arc_offset_[ci + 1] <= arc) ++ci;
    return EndpointPos{ci, arc - arc_offset_[ci]};
}

int SignedChordDiagram::in_arc(const EndpointPos& p) const {
    int n = circle_size(p.circle);
    return arc_id(p.circle, (p.pos + n - 1) % n);
}

int SignedChordDiagram::out_arc(const EndpointPos& p) const { return arc_id(p.circle, p.pos); }

SignedChordDiagram blunt(const GaussDiagram& g) { return g.diagram; }

GaussDiagram forget_marks(const TwistedGaussDiagram& t) { return t.gauss; }

std::string level_text(Level l) {
    switch (l) {
        case Level::signed_chords: return "signed";
        case Level::gauss: return "gauss";
        case Level::twisted_signed: return "twisted-signed";
        case Level::twisted_gauss: return "twisted-gauss";
    }
    return "?";
}

ValidationResult validate(const RawDiagram& raw) {
    ValidationResult res;
    auto err = [&res](std::string msg, int ci = -1, int pos = -1) {
        res.errors.push_back({std::move(msg), ci, pos});
    };

    struct Occ {
        int circle, pos, sign, tag;
    };
    std::map<long, std::vector<Occ>> occs;
    std::vector<long> order;  // labels by first occurrence
    bool any_tag = false, any_untagged = false;
    for (int ci = 0; ci < static_cast<int>(raw.circles.size()); ++ci) {
        const auto& circ = raw.circles[ci];
        for (int pos = 0; pos < static_cast<int>(circ.endpoints.size()); ++pos) {
            const auto& e = circ.endpoints[pos];
            if (!occs.count(e.label)) order.push_back(e.label);
            occs[e.label].push_back({ci, pos, e.sign, e.tag});
            (e.tag ? any_tag : any_untagged) = true;
        }
        for (int g : circ.marks_before) {
            int ngaps = std::max<size_t>(circ.endpoints.size(), 1);
            if (g < 0 || g >= ngaps) err("mark position out of range", ci, g);
        }
    }
    if (any_tag && any_untagged) err("mixed tagged and untagged endpoints");

    std::vector<int> signs;
    std::vector<int> over_occ;
    for (long label : order) {
        const auto& v = occs[label];
        std::string lbl = std::to_string(label);
        if (v.size() != 2) {
            err("chord " + lbl + " has " + std::to_string(v.size()) + " endpoints",
                v.front().circle, v.front().pos);
            continue;
        }
        int s0 = v[0].sign, s1 = v[1].sign;
        if (s0 == 0 && s1 == 0)
            err("missing sign: chord " + lbl, v[0].circle, v[0].pos);
        else if (s0 != 0 && s1 != 0 && s0 != s1)
            err("conflicting signs: chord " + lbl, v[1].circle, v[1].pos);
        signs.push_back(s0 != 0 ? s0 : s1);
        if (any_tag) {
            bool o0 = v[0].tag == 1, o1 = v[1].tag == 1;
            if (v[0].tag == 0 || v[1].tag == 0 || o0 == o1) {
                err("chord " + lbl + " must have one over and one under endpoint",
                    v[0].circle, v[0].pos);
                over_occ.push_back(0);
            } else {
                over_occ.push_back(o0 ? 0 : 1);
            }
        }
    }
    if (!res.errors.empty()) return res;

    std::map<long, ChordId> renumber;
    for (long label : order) renumber[label] = static_cast<ChordId>(renumber.size());
    std::vector<std::vector<ChordId>> circles;
    CircleMarks marks;
    for (const auto& circ : raw.circles) {
        std::vector<ChordId> c;
        c.reserve(circ.endpoints.size());
        for (const auto& e : circ.endpoints) c.push_back(renumber[e.label]);
        std::vector<int> gaps(std::max<size_t>(circ.endpoints.size(), 1), 0);
        for (int g : circ.marks_before) gaps[g]++;
        circles.push_back(std::move(c));
        marks.gap_counts.push_back(std::move(gaps));
    }

    Document doc;
    doc.name = raw.name;
    doc.diagram = SignedChordDiagram(std::move(circles), std::move(signs));
    if (any_tag || !any_untagged) doc.arrows = GaussArrows{std::move(over_occ)};
    doc.marks = std::move(marks);
    res.document = std::move(doc);
    return res;
}

// ---- resolution -----------------------------------------------------------

namespace {

// arc-end encoding: arc*2 = tail, arc*2+1 = head
inline int tail_end(int arc) { return arc * 2; }
inline int head_end(int arc) { return arc * 2 + 1; }

struct Joints {
    std::vector<int> partner;
    void tie(int a, int b) {
        partner[a] = b;
        partner[b] = a;
    }
};

// fills partner for a state; surgery per chord {p,q}:
//   marker*sign = +1: head(in p)~tail(out q), head(in q)~tail(out p)
//   marker*sign = -1: head(in p)~head(in q), tail(out p)~tail(out q)
void build_joints(const SignedChordDiagram& d, State s, Joints& j) {
    for (ChordId ch = 0; ch < d.num_chords(); ++ch) {
        const auto& e = d.ends(ch);
        int hip = head_end(d.in_arc(e[0])), top = tail_end(d.out_arc(e[0]));
        int hiq = head_end(d.in_arc(e[1])), toq = tail_end(d.out_arc(e[1]));
        if (marker(s, ch) * d.sign(ch) > 0) {
            j.tie(hip, toq);
            j.tie(hiq, top);
        } else {
            j.tie(hip, hiq);
            j.tie(top, toq);
        }
    }
}

}  // namespace

ResolvedCurve resolve(const SignedChordDiagram& d, State s) {
    ResolvedCurve rc;
    rc.comp_of_arc.assign(d.arc_count(), -1);
    Joints j;
    j.partner.assign(d.arc_count() * 2, -1);
    build_joints(d, s, j);
    for (int a = 0; a < d.arc_count(); ++a) {
        if (rc.comp_of_arc[a] != -1) continue;
        int comp = rc.count();
        std::vector<std::pair<int, int>> trail;
        if (j.partner[head_end(a)] == -1) {  // closed arc of a chord-free circle
            rc.comp_of_arc[a] = comp;
            trail.emplace_back(a, 1);
        } else {
            int arc = a, dir = 1;
            do {
                rc.comp_of_arc[arc] = comp;
                trail.emplace_back(arc, dir);
                int exit = dir > 0 ? head_end(arc) : tail_end(arc);
                int next = j.partner[exit];
                arc = next / 2;
                dir = (next % 2 == 0) ? 1 : -1;
            } while (!(arc == a && dir == 1));
        }
        rc.components.push_back(std::move(trail));
    }
    return rc;
}

ComponentCounter::ComponentCounter(const SignedChordDiagram& d) {
    arcs_ = d.arc_count();
    partner_.assign(arcs_ * 2, -1);
    visited_arc_.assign(arcs_, 0);
    for (int ci = 0; ci < d.num_circles(); ++ci) {
        if (d.circle_size(ci) == 0)
            ++free_loops_;
        else
            for (int pos = 0; pos < d.circle_size(ci); ++pos)
                chord_arcs_.push_back(d.arc_id(ci, pos));
    }
    for (ChordId ch = 0; ch < d.num_chords(); ++ch) {
        const auto& e = d.ends(ch);
        slots_.push_back({head_end(d.in_arc(e[0])), tail_end(d.out_arc(e[0])),
                          head_end(d.in_arc(e[1])), tail_end(d.out_arc(e[1])), d.sign(ch)});
    }
}

int ComponentCounter::count(State s) {
    for (int k = 0; k < static_cast<int>(slots_.size()); ++k) {
        const auto& c = slots_[k];
        int m = (s >> k) & 1u ? -1 : 1;
        if (m * c.sign > 0) {
            partner_[c.head_in_p] = c.tail_out_q;
            partner_[c.tail_out_q] = c.head_in_p;
            partner_[c.head_in_q] = c.tail_out_p;
            partner_[c.tail_out_p] = c.head_in_q;
        } else {
            partner_[c.head_in_p] = c.head_in_q;
            partner_[c.head_in_q] = c.head_in_p;
            partner_[c.tail_out_p] = c.tail_out_q;
            partner_[c.tail_out_q] = c.tail_out_p;
        }
    }
    std::fill(visited_arc_.begin(), visited_arc_.end(), 0);
    int loops = free_loops_;
    for (int a : chord_arcs_) {
        if (visited_arc_[a]) continue;
        ++loops;
        int arc = a, dir = 1;
        do {
            visited_arc_[arc] = 1;
            int exit = dir > 0 ? head_end(arc) : tail_end(arc);
            int next = partner_[exit];
            arc = next / 2;
            dir = (next % 2 == 0) ? 1 : -1;
        } while (!(arc == a && dir == 1));
    }
    return loops;
}

}  // namespace vlink
