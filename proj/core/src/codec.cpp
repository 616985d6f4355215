#include "vlink/codec.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace vlink::codec {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

struct Lexed {
    RawDiagram raw;
    std::vector<ParseError> errors;
};

Lexed lex(const std::string& text) {
    Lexed out;
    bool saw_header = false;
    int lineno = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        size_t i = 0;
        while (i < line.size() && is_space(line[i])) ++i;
        if (i == line.size()) continue;
        if (line.compare(i, 8, "diagram ") == 0 || line.compare(i, 7, "diagram") == 0) {
            std::string name = line.substr(i + 7);
            size_t a = name.find_first_not_of(" \t");
            size_t b = name.find_last_not_of(" \t");
            name = a == std::string::npos ? "" : name.substr(a, b - a + 1);
            if (saw_header)
                out.errors.push_back({lineno, static_cast<int>(i) + 1, "duplicate diagram header"});
            else if (name.empty())
                out.errors.push_back({lineno, static_cast<int>(i) + 1, "diagram header needs a name"});
            else
                out.raw.name = name;
            saw_header = true;
            continue;
        }
        if (line.compare(i, 7, "circle:") != 0) {
            out.errors.push_back({lineno, static_cast<int>(i) + 1, "unrecognized line"});
            continue;
        }
        i += 7;
        RawCircle circ;
        std::vector<int> mark_seen_at;  // endpoints seen when each mark appeared
        while (i < line.size()) {
            while (i < line.size() && is_space(line[i])) ++i;
            if (i == line.size()) break;
            int col = static_cast<int>(i) + 1;
            if (line[i] == '*') {
                ++i;
                if (i < line.size() && !is_space(line[i])) {
                    out.errors.push_back({lineno, col, "malformed token"});
                    while (i < line.size() && !is_space(line[i])) ++i;
                    continue;
                }
                mark_seen_at.push_back(static_cast<int>(circ.endpoints.size()));
                continue;
            }
            RawEndpoint e;
            if (line[i] == 'O' || line[i] == 'U') {
                e.tag = line[i] == 'O' ? 1 : 2;
                ++i;
            }
            if (i >= line.size() || !std::isdigit(static_cast<unsigned char>(line[i]))) {
                out.errors.push_back({lineno, col, "malformed token"});
                while (i < line.size() && !is_space(line[i])) ++i;
                continue;
            }
            long v = 0;
            bool overflow = false;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
                v = v * 10 + (line[i++] - '0');
                if (v > 1000000) overflow = true;
            }
            if (overflow) {
                out.errors.push_back({lineno, col, "chord label too large"});
                while (i < line.size() && !is_space(line[i])) ++i;
                continue;
            }
            e.label = v;
            if (i < line.size() && (line[i] == '+' || line[i] == '-')) {
                e.sign = line[i] == '+' ? 1 : -1;
                ++i;
            }
            if (i < line.size() && !is_space(line[i])) {
                out.errors.push_back({lineno, col, "malformed token"});
                while (i < line.size() && !is_space(line[i])) ++i;
                continue;
            }
            circ.endpoints.push_back(e);
        }
        int n = static_cast<int>(circ.endpoints.size());
        for (int seen : mark_seen_at) circ.marks_before.push_back(n == 0 ? 0 : seen % n);
        out.raw.circles.push_back(std::move(circ));
    }
    return out;
}

}  // namespace

ParseResult parse(const std::string& text) {
    ParseResult res;
    Lexed lx = lex(text);
    res.errors = std::move(lx.errors);
    if (!res.errors.empty()) return res;
    ValidationResult vr = validate(lx.raw);
    if (!vr.ok()) {
        for (const auto& e : vr.errors) res.errors.push_back({0, 0, e.message});
        return res;
    }
    res.document = std::move(*vr.document);
    return res;
}

// ---- canonical serialization ----------------------------------------------

namespace {

// comparison token: endpoints sort before marks; then by assigned chord
// number, sign code (first occurrence only, '-' before '+'), tag
struct Tok {
    int kind;   // 0 endpoint, 1 mark
    int chord;  // assigned number
    int sign;   // 0 none, 1 minus, 2 plus
    int tag;    // 0 none, 1 over, 2 under
    auto operator<=>(const Tok&) const = default;
};

struct CircleView {
    std::vector<int> tokens_chord;  // -1 = mark, else original chord id
    std::vector<int> tokens_tag;
    int ntok() const { return static_cast<int>(tokens_chord.size()); }
};

struct Candidate {
    std::vector<std::vector<Tok>> lines;
    bool operator<(const Candidate& o) const { return lines < o.lines; }
};

// expand one arrangement (order of chorded circles + rotation offsets) into
// comparable token lines, renumbering chords by first occurrence
Candidate expand(const std::vector<const CircleView*>& order, const std::vector<int>& rots,
                 const std::vector<int>& signs) {
    Candidate cand;
    std::map<int, int> renum;
    for (size_t k = 0; k < order.size(); ++k) {
        const CircleView& cv = *order[k];
        int n = cv.ntok();
        std::vector<Tok> line;
        line.reserve(n);
        for (int t = 0; t < n; ++t) {
            int idx = (rots[k] + t) % n;
            int ch = cv.tokens_chord[idx];
            if (ch < 0) {
                line.push_back({1, 0, 0, 0});
                continue;
            }
            auto [it, fresh] = renum.try_emplace(ch, static_cast<int>(renum.size()));
            int sign_code = fresh ? (signs[ch] > 0 ? 2 : 1) : 0;
            line.push_back({0, it->second, sign_code, cv.tokens_tag[idx]});
        }
        cand.lines.push_back(std::move(line));
    }
    return cand;
}

std::string render(const Candidate& cand, const std::vector<std::vector<Tok>>& markonly) {
    std::ostringstream out;
    auto emit = [&out](const std::vector<Tok>& line) {
        out << "circle:";
        for (const auto& t : line) {
            out << ' ';
            if (t.kind == 1) {
                out << '*';
                continue;
            }
            if (t.tag == 1) out << 'O';
            if (t.tag == 2) out << 'U';
            out << t.chord + 1;
            if (t.sign == 1) out << '-';
            if (t.sign == 2) out << '+';
        }
        out << '\n';
    };
    for (const auto& line : cand.lines) emit(line);
    for (const auto& line : markonly) emit(line);
    return out.str();
}

struct CanonicalParts {
    Candidate best;
    std::vector<std::vector<Tok>> markonly;
};

CanonicalParts canonical_parts(const Document& doc) {
    const auto& d = doc.diagram;
    std::vector<CircleView> chorded;
    std::vector<int> markonly_counts;
    for (int ci = 0; ci < d.num_circles(); ++ci) {
        const auto& circ = d.circle(ci);
        const auto& gaps = doc.marks.gap_counts[ci];
        if (circ.empty()) {
            markonly_counts.push_back(gaps.empty() ? 0 : gaps[0]);
            continue;
        }
        CircleView cv;
        for (int pos = 0; pos < static_cast<int>(circ.size()); ++pos) {
            for (int m = 0; m < gaps[pos]; ++m) {
                cv.tokens_chord.push_back(-1);
                cv.tokens_tag.push_back(0);
            }
            cv.tokens_chord.push_back(circ[pos]);
            int tag = 0;
            if (doc.arrows) {
                EndpointPos here{ci, pos};
                tag = (d.ends(circ[pos])[doc.arrows->over_occurrence[circ[pos]]] == here) ? 1 : 2;
            }
            cv.tokens_tag.push_back(tag);
        }
        chorded.push_back(std::move(cv));
    }

    // group same-length circles; permutations only within a group
    std::vector<int> idx(chorded.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return chorded[a].ntok() < chorded[b].ntok(); });
    std::vector<std::pair<int, int>> groups;  // [begin, end) into idx
    double cost = 1.0;
    for (size_t i = 0; i < idx.size();) {
        size_t j = i;
        while (j < idx.size() && chorded[idx[j]].ntok() == chorded[idx[i]].ntok()) ++j;
        for (size_t k = 2; k <= j - i; ++k) cost *= static_cast<double>(k);
        groups.emplace_back(static_cast<int>(i), static_cast<int>(j));
        i = j;
    }
    for (const auto& cv : chorded) cost *= cv.ntok();
    if (cost > 2e6) throw CapError("canonical form: diagram too large to canonicalize");

    std::optional<Candidate> best;
    std::vector<int> perm(idx);
    // iterate group-wise permutations via odometer over per-group permutations
    std::vector<std::vector<std::vector<int>>> group_perms;
    for (auto [b, e] : groups) {
        std::vector<int> base(idx.begin() + b, idx.begin() + e);
        std::sort(base.begin(), base.end());
        std::vector<std::vector<int>> perms;
        do {
            perms.push_back(base);
        } while (std::next_permutation(base.begin(), base.end()));
        group_perms.push_back(std::move(perms));
    }
    std::vector<size_t> sel(groups.size(), 0);
    while (true) {
        std::vector<const CircleView*> order;
        for (size_t g = 0; g < groups.size(); ++g)
            for (int i : group_perms[g][sel[g]]) order.push_back(&chorded[i]);
        std::vector<int> rots(order.size(), 0);
        while (true) {
            Candidate cand = expand(order, rots, d.signs());
            if (!best || cand < *best) best = std::move(cand);
            size_t k = 0;
            for (; k < rots.size(); ++k) {
                if (++rots[k] < order[k]->ntok()) break;
                rots[k] = 0;
            }
            if (k == rots.size()) break;
        }
        size_t g = 0;
        for (; g < sel.size(); ++g) {
            if (++sel[g] < group_perms[g].size()) break;
            sel[g] = 0;
        }
        if (g == sel.size()) break;
    }

    CanonicalParts parts;
    parts.best = best ? std::move(*best) : Candidate{};
    std::sort(markonly_counts.begin(), markonly_counts.end());
    for (int c : markonly_counts)
        parts.markonly.emplace_back(std::vector<Tok>(static_cast<size_t>(c), Tok{1, 0, 0, 0}));
    return parts;
}

}  // namespace

std::string serialize(const Document& doc) {
    CanonicalParts parts = canonical_parts(doc);
    return render(parts.best, parts.markonly);
}

Document canonicalize(const Document& doc) {
    CanonicalParts parts = canonical_parts(doc);
    Document out;
    out.name = doc.name;
    bool arrows = doc.arrows.has_value();
    std::vector<std::vector<ChordId>> circles;
    std::vector<int> signs;
    std::vector<int> over_occ;
    std::vector<int> seen_count;
    CircleMarks marks;
    auto add_line = [&](const std::vector<Tok>& line) {
        std::vector<ChordId> circ;
        std::vector<int> pending_gaps;
        int pending = 0;
        for (const auto& t : line) {
            if (t.kind == 1) {
                ++pending;
                continue;
            }
            ChordId ch = t.chord;
            if (ch >= static_cast<int>(signs.size())) {
                signs.resize(ch + 1, 0);
                over_occ.resize(ch + 1, 0);
                seen_count.resize(ch + 1, 0);
            }
            if (t.sign) signs[ch] = t.sign == 2 ? 1 : -1;
            if (arrows && t.tag == 1) over_occ[ch] = seen_count[ch];
            seen_count[ch]++;
            pending_gaps.push_back(pending);
            pending = 0;
            circ.push_back(ch);
        }
        if (circ.empty()) {
            marks.gap_counts.push_back({pending});
        } else {
            pending_gaps[0] += pending;  // trailing marks wrap to gap 0
            marks.gap_counts.push_back(std::move(pending_gaps));
        }
        circles.push_back(std::move(circ));
    };
    for (const auto& line : parts.best.lines) add_line(line);
    for (const auto& line : parts.markonly) add_line(line);
    out.diagram = SignedChordDiagram(std::move(circles), std::move(signs));
    if (arrows) out.arrows = GaussArrows{std::move(over_occ)};
    out.marks = std::move(marks);
    return out;
}

std::string canonical_code(const SignedChordDiagram& d) {
    Document doc;
    doc.diagram = d;
    doc.marks.gap_counts.assign(d.num_circles(), {});
    for (int ci = 0; ci < d.num_circles(); ++ci)
        doc.marks.gap_counts[ci].assign(std::max(d.circle_size(ci), 1), 0);
    return serialize(doc);
}

std::string canonical_code(const GaussDiagram& g) {
    Document doc;
    doc.diagram = g.diagram;
    doc.arrows = g.arrows;
    doc.marks.gap_counts.assign(g.diagram.num_circles(), {});
    for (int ci = 0; ci < g.diagram.num_circles(); ++ci)
        doc.marks.gap_counts[ci].assign(std::max(g.diagram.circle_size(ci), 1), 0);
    return serialize(doc);
}

}  // namespace vlink::codec
