#include "vlink/moves.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "vlink/orientation.hpp"

namespace vlink {

namespace {

std::vector<std::vector<int>> norm_marks(const Document& doc) {
    const auto& d = doc.diagram;
    std::vector<std::vector<int>> out(d.num_circles());
    for (int ci = 0; ci < d.num_circles(); ++ci) {
        int slots = std::max(d.circle_size(ci), 1);
        out[ci].assign(slots, 0);
        if (ci < static_cast<int>(doc.marks.gap_counts.size())) {
            const auto& src = doc.marks.gap_counts[ci];
            for (int g = 0; g < slots && g < static_cast<int>(src.size()); ++g)
                out[ci][g] = src[g];
        }
    }
    return out;
}

// token model of a circle: chord id per endpoint, -1 per mark
struct CircleToks {
    std::vector<int> toks;
    std::vector<int> endpoint_tok;  // endpoint position -> token index
};

std::vector<CircleToks> to_tokens(const Document& doc) {
    const auto& d = doc.diagram;
    auto marks = norm_marks(doc);
    std::vector<CircleToks> out(d.num_circles());
    for (int ci = 0; ci < d.num_circles(); ++ci) {
        auto& t = out[ci];
        int n = d.circle_size(ci);
        if (n == 0) {
            t.toks.assign(marks[ci][0], -1);
            continue;
        }
        for (int g = 0; g < n; ++g) {
            t.toks.insert(t.toks.end(), marks[ci][g], -1);
            t.endpoint_tok.push_back(static_cast<int>(t.toks.size()));
            t.toks.push_back(d.circle(ci)[g]);
        }
    }
    return out;
}

Document rebuild(const std::string& name, const std::vector<CircleToks>& toks,
                 const std::vector<int>& old_signs) {
    std::map<int, ChordId> renum;
    std::vector<int> signs;
    for (const auto& c : toks)
        for (int t : c.toks)
            if (t >= 0 && !renum.count(t)) {
                renum[t] = static_cast<ChordId>(signs.size());
                signs.push_back(old_signs[t]);
            }
    std::vector<std::vector<ChordId>> circles;
    CircleMarks marks;
    for (const auto& c : toks) {
        std::vector<ChordId> word;
        for (int t : c.toks)
            if (t >= 0) word.push_back(renum[t]);
        int slots = std::max<int>(static_cast<int>(word.size()), 1);
        std::vector<int> gaps(slots, 0);
        int eidx = 0;
        for (int t : c.toks) {
            if (t < 0)
                gaps[eidx % slots] += 1;
            else
                ++eidx;
        }
        circles.push_back(std::move(word));
        marks.gap_counts.push_back(std::move(gaps));
    }
    Document out;
    out.name = name;
    out.diagram = SignedChordDiagram(std::move(circles), std::move(signs));
    out.marks = std::move(marks);
    return out;
}

// adjacent endpoint pair of two different chords with a mark-free gap between
struct Adj {
    int ci, p, q;
    ChordId first, second;
};

struct SiteScan {
    std::vector<Adj> pairs;
    std::vector<std::pair<ChordId, EndpointPos>> kinks;  // r1_remove sites
};

SiteScan scan_adjacencies(const Document& doc) {
    const auto& d = doc.diagram;
    auto marks = norm_marks(doc);
    SiteScan out;
    for (int ci = 0; ci < d.num_circles(); ++ci) {
        int n = d.circle_size(ci);
        if (n < 2) continue;
        for (int p = 0; p < n; ++p) {
            int q = (p + 1) % n;
            if (marks[ci][q] != 0) continue;
            ChordId cp = d.circle(ci)[p], cq = d.circle(ci)[q];
            if (cp == cq)
                out.kinks.push_back({cp, EndpointPos{ci, p}});
            else
                out.pairs.push_back({ci, p, q, cp, cq});
        }
    }
    return out;
}

constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};

int pair_slot(int a, int b) {
    int lo = std::min(a, b), hi = std::max(a, b);
    if (lo == 0) return hi == 1 ? 0 : 1;
    return 2;
}

std::optional<R3Descriptor> r3_descriptor(const SignedChordDiagram& d, const Adj& a,
                                          const Adj& b, const Adj& c) {
    std::array<const Adj*, 3> inst = {&a, &b, &c};
    std::array<ChordId, 3> chords = {a.first, a.second, 0};
    {
        std::vector<ChordId> all = {a.first, a.second, b.first, b.second, c.first, c.second};
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        if (all.size() != 3) return std::nullopt;
        chords = {all[0], all[1], all[2]};
    }
    auto local = [&chords](ChordId ch) {
        return static_cast<int>(std::find(chords.begin(), chords.end(), ch) - chords.begin());
    };
    R3Descriptor descr;
    std::array<bool, 3> seen = {false, false, false};
    for (const Adj* x : inst) {
        int lf = local(x->first), ls = local(x->second);
        int slot = pair_slot(lf, ls);
        if (seen[slot]) return std::nullopt;
        seen[slot] = true;
        descr.order_bits[slot] = lf < ls ? 0 : 1;
    }
    for (int i = 0; i < 3; ++i) descr.signs[i] = d.sign(chords[i]);
    return descr;
}

std::array<int, 6> descr_key(const R3Descriptor& d) {
    return {d.order_bits[0], d.order_bits[1], d.order_bits[2],
            d.signs[0],      d.signs[1],      d.signs[2]};
}

int insert_index(const CircleToks& c, int gap) {
    return c.endpoint_tok.empty() ? static_cast<int>(c.toks.size()) : c.endpoint_tok[gap];
}

[[noreturn]] void bad_site() { throw DomainError("move: inapplicable site"); }

void check_gap(const Document& doc, int ci, int gap) {
    const auto& d = doc.diagram;
    if (ci < 0 || ci >= d.num_circles()) bad_site();
    if (gap < 0 || gap >= std::max(d.circle_size(ci), 1)) bad_site();
}

}  // namespace

std::string move_kind_text(MoveKind k) {
    switch (k) {
        case MoveKind::r1_add: return "R1_add";
        case MoveKind::r1_remove: return "R1_remove";
        case MoveKind::r2_add: return "R2_add";
        case MoveKind::r2_remove: return "R2_remove";
        case MoveKind::r3: return "R3";
        case MoveKind::m1_add: return "M1_add";
        case MoveKind::m1_remove: return "M1_remove";
        case MoveKind::m2: return "M2";
    }
    return "?";
}

std::string MoveSpec::text() const {
    auto pos = [](const EndpointPos& p) {
        return "circle " + std::to_string(p.circle) + " pos " + std::to_string(p.pos);
    };
    auto site = [](int c, int g) {
        return "circle " + std::to_string(c) + " gap " + std::to_string(g);
    };
    auto lbl = [](ChordId c) { return std::to_string(c + 1); };
    std::string k = move_kind_text(kind);
    switch (kind) {
        case MoveKind::r1_add:
            return k + " " + site(circle, gap) + " sign " + (sign > 0 ? "+" : "-");
        case MoveKind::r1_remove:
            return k + " chord " + lbl(chord) + " at " + pos(at);
        case MoveKind::r2_add:
            return k + std::string(variant == R2Variant::nested ? " nested " : " interleaved ") +
                   site(circle, gap) + " / " + site(circle2, gap2) + " sign " +
                   (sign > 0 ? "+" : "-");
        case MoveKind::r2_remove:
            return k + std::string(variant == R2Variant::nested ? " nested" : " interleaved") +
                   " chords " + lbl(chord) + "," + lbl(chord2) + " at " + pos(at) + " / " +
                   pos(at2);
        case MoveKind::r3:
            return k + " chords " + lbl(triple[0]) + "," + lbl(triple[1]) + "," + lbl(triple[2]) +
                   " at " + pos(sites[0]) + " / " + pos(sites[1]) + " / " + pos(sites[2]);
        case MoveKind::m1_add:
        case MoveKind::m1_remove:
            return k + " " + site(circle, gap);
        case MoveKind::m2:
            return k + " " + site(circle, gap) +
                   (direction > 0 ? " forward" : " backward");
    }
    return k;
}

R3Descriptor r3_canonical(const R3Descriptor& d) {
    std::array<int, 3> perm = {0, 1, 2};
    std::array<int, 6> best{};
    bool have = false;
    R3Descriptor best_d;
    do {
        R3Descriptor nd;
        for (int pi = 0; pi < 3; ++pi) {
            int a = kPairs[pi][0], b = kPairs[pi][1];
            int na = perm[a], nb = perm[b];
            int slot = pair_slot(na, nb);
            int first = d.order_bits[pi] == 0 ? a : b;
            nd.order_bits[slot] = perm[first] == std::min(na, nb) ? 0 : 1;
        }
        for (int ch = 0; ch < 3; ++ch) nd.signs[perm[ch]] = d.signs[ch];
        auto key = descr_key(nd);
        if (!have || key < best) {
            best = key;
            best_d = nd;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best_d;
}

bool r3_enabled(const R3Descriptor& d) {
    static const std::array<std::array<int, 6>, 8> enabled = {{
        {0, 0, 0, -1, -1, -1},
        {0, 0, 0, -1, -1, 1},
        {0, 0, 0, -1, 1, 1},
        {0, 0, 0, 1, -1, -1},
        {0, 0, 0, 1, 1, -1},
        {0, 0, 0, 1, 1, 1},
        {0, 1, 0, -1, -1, 1},
        {0, 1, 0, -1, 1, 1},
    }};
    auto key = descr_key(r3_canonical(d));
    return std::find(enabled.begin(), enabled.end(), key) != enabled.end();
}

std::vector<MoveSpec> enumerate_moves(const Document& doc) {
    const auto& d = doc.diagram;
    auto marks = norm_marks(doc);
    SiteScan scan = scan_adjacencies(doc);
    std::vector<MoveSpec> out;

    for (int ci = 0; ci < d.num_circles(); ++ci)
        for (int g = 0; g < std::max(d.circle_size(ci), 1); ++g)
            for (int s : {-1, +1}) {
                MoveSpec m;
                m.kind = MoveKind::r1_add;
                m.circle = ci;
                m.gap = g;
                m.sign = s;
                out.push_back(m);
            }

    for (const auto& [ch, at] : scan.kinks) {
        MoveSpec m;
        m.kind = MoveKind::r1_remove;
        m.chord = ch;
        m.at = at;
        out.push_back(m);
    }

    {
        std::vector<std::pair<int, int>> sites;
        for (int ci = 0; ci < d.num_circles(); ++ci)
            for (int g = 0; g < std::max(d.circle_size(ci), 1); ++g) sites.push_back({ci, g});
        for (size_t i = 0; i < sites.size(); ++i)
            for (size_t j = i; j < sites.size(); ++j)
                for (R2Variant v : {R2Variant::nested, R2Variant::interleaved})
                    for (int s : {-1, +1}) {
                        MoveSpec m;
                        m.kind = MoveKind::r2_add;
                        m.circle = sites[i].first;
                        m.gap = sites[i].second;
                        m.circle2 = sites[j].first;
                        m.gap2 = sites[j].second;
                        m.variant = v;
                        m.sign = s;
                        out.push_back(m);
                    }
    }

    const auto& pairs = scan.pairs;
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            const Adj &a = pairs[i], &b = pairs[j];
            ChordId c1 = std::min(a.first, a.second), c2 = std::max(a.first, a.second);
            if (std::min(b.first, b.second) != c1 || std::max(b.first, b.second) != c2)
                continue;
            if (d.sign(c1) != -d.sign(c2)) continue;
            EndpointPos e1{a.ci, a.p}, e2{a.ci, a.q}, e3{b.ci, b.p}, e4{b.ci, b.q};
            std::array<EndpointPos, 4> eps = {e1, e2, e3, e4};
            std::sort(eps.begin(), eps.end());
            if (std::adjacent_find(eps.begin(), eps.end()) != eps.end()) continue;
            MoveSpec m;
            m.kind = MoveKind::r2_remove;
            m.chord = c1;
            m.chord2 = c2;
            m.at = {a.ci, a.p};
            m.at2 = {b.ci, b.p};
            m.variant = a.first == b.first ? R2Variant::interleaved : R2Variant::nested;
            out.push_back(m);
        }

    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j)
            for (size_t k = j + 1; k < pairs.size(); ++k) {
                const Adj &a = pairs[i], &b = pairs[j], &c = pairs[k];
                std::array<EndpointPos, 6> eps = {
                    EndpointPos{a.ci, a.p}, EndpointPos{a.ci, a.q}, EndpointPos{b.ci, b.p},
                    EndpointPos{b.ci, b.q}, EndpointPos{c.ci, c.p}, EndpointPos{c.ci, c.q}};
                std::sort(eps.begin(), eps.end());
                if (std::adjacent_find(eps.begin(), eps.end()) != eps.end()) continue;
                auto descr = r3_descriptor(d, a, b, c);
                if (!descr || !r3_enabled(*descr)) continue;
                MoveSpec m;
                m.kind = MoveKind::r3;
                std::array<ChordId, 6> ch = {a.first, a.second, b.first,
                                             b.second, c.first, c.second};
                std::sort(ch.begin(), ch.end());
                m.triple = {ch[0], ch[2], ch[4]};
                m.sites = {EndpointPos{a.ci, a.p}, EndpointPos{b.ci, b.p},
                           EndpointPos{c.ci, c.p}};
                out.push_back(m);
            }

    for (int ci = 0; ci < d.num_circles(); ++ci)
        for (int g = 0; g < std::max(d.circle_size(ci), 1); ++g) {
            MoveSpec m;
            m.kind = MoveKind::m1_add;
            m.circle = ci;
            m.gap = g;
            out.push_back(m);
        }

    for (int ci = 0; ci < d.num_circles(); ++ci)
        for (int g = 0; g < std::max(d.circle_size(ci), 1); ++g)
            if (marks[ci][g] >= 2) {
                MoveSpec m;
                m.kind = MoveKind::m1_remove;
                m.circle = ci;
                m.gap = g;
                out.push_back(m);
            }

    for (int ci = 0; ci < d.num_circles(); ++ci) {
        if (d.circle_size(ci) == 0) continue;
        for (int g = 0; g < d.circle_size(ci); ++g)
            if (marks[ci][g] >= 1)
                for (int dir : {-1, +1}) {
                    MoveSpec m;
                    m.kind = MoveKind::m2;
                    m.circle = ci;
                    m.gap = g;
                    m.direction = dir;
                    out.push_back(m);
                }
    }

    return out;
}

Document apply_move(const Document& doc, const MoveSpec& m) {
    const auto& d = doc.diagram;
    auto marks = norm_marks(doc);
    auto toks = to_tokens(doc);
    std::vector<int> signs = d.signs();
    int nch = d.num_chords();

    auto endpoint_at = [&](const EndpointPos& p) {
        if (p.circle < 0 || p.circle >= d.num_circles()) bad_site();
        if (p.pos < 0 || p.pos >= d.circle_size(p.circle)) bad_site();
        return d.circle(p.circle)[p.pos];
    };
    auto check_adj = [&](const EndpointPos& p) {
        int n = d.circle_size(p.circle);
        int q = (p.pos + 1) % n;
        if (marks[p.circle][q] != 0) bad_site();
        return q;
    };

    switch (m.kind) {
        case MoveKind::r1_add: {
            check_gap(doc, m.circle, m.gap);
            if (m.sign != 1 && m.sign != -1) bad_site();
            auto& c = toks[m.circle];
            c.toks.insert(c.toks.begin() + insert_index(c, m.gap), 2, nch);
            signs.push_back(m.sign);
            break;
        }
        case MoveKind::r1_remove: {
            ChordId ch = endpoint_at(m.at);
            if (ch != m.chord) bad_site();
            int q = check_adj(m.at);
            if (d.circle(m.at.circle)[q] != ch) bad_site();
            auto& c = toks[m.at.circle];
            int i1 = c.endpoint_tok[m.at.pos], i2 = c.endpoint_tok[q];
            if (i1 > i2) std::swap(i1, i2);
            c.toks.erase(c.toks.begin() + i2);
            c.toks.erase(c.toks.begin() + i1);
            break;
        }
        case MoveKind::r2_add: {
            check_gap(doc, m.circle, m.gap);
            check_gap(doc, m.circle2, m.gap2);
            if (m.sign != 1 && m.sign != -1) bad_site();
            int cc = nch, dd = nch + 1;
            bool nested = m.variant == R2Variant::nested;
            if (m.circle == m.circle2 && m.gap == m.gap2) {
                auto& c = toks[m.circle];
                std::array<int, 4> tpl = nested ? std::array<int, 4>{cc, dd, dd, cc}
                                                : std::array<int, 4>{cc, dd, cc, dd};
                c.toks.insert(c.toks.begin() + insert_index(c, m.gap), tpl.begin(), tpl.end());
            } else {
                std::array<int, 2> t1 = {cc, dd};
                std::array<int, 2> t2 = nested ? std::array<int, 2>{dd, cc}
                                               : std::array<int, 2>{cc, dd};
                int i1 = insert_index(toks[m.circle], m.gap);
                int i2 = insert_index(toks[m.circle2], m.gap2);
                if (m.circle == m.circle2 && i1 < i2) {
                    auto& c = toks[m.circle];
                    c.toks.insert(c.toks.begin() + i2, t2.begin(), t2.end());
                    c.toks.insert(c.toks.begin() + i1, t1.begin(), t1.end());
                } else if (m.circle == m.circle2) {
                    auto& c = toks[m.circle];
                    c.toks.insert(c.toks.begin() + i1, t1.begin(), t1.end());
                    c.toks.insert(c.toks.begin() + i2, t2.begin(), t2.end());
                } else {
                    toks[m.circle].toks.insert(toks[m.circle].toks.begin() + i1, t1.begin(),
                                               t1.end());
                    toks[m.circle2].toks.insert(toks[m.circle2].toks.begin() + i2, t2.begin(),
                                                t2.end());
                }
            }
            signs.push_back(m.sign);
            signs.push_back(-m.sign);
            break;
        }
        case MoveKind::r2_remove: {
            ChordId ca = endpoint_at(m.at);
            int q1 = check_adj(m.at);
            ChordId cb = d.circle(m.at.circle)[q1];
            ChordId cc = endpoint_at(m.at2);
            int q2 = check_adj(m.at2);
            ChordId cd = d.circle(m.at2.circle)[q2];
            auto is_pair = [&](ChordId x, ChordId y) {
                return std::min(x, y) == m.chord && std::max(x, y) == m.chord2;
            };
            if (m.chord == m.chord2 || !is_pair(ca, cb) || !is_pair(cc, cd) || ca == cb ||
                cc == cd)
                bad_site();
            if (signs[m.chord] != -signs[m.chord2]) bad_site();
            std::array<std::pair<int, int>, 4> slots = {
                std::pair<int, int>{m.at.circle, toks[m.at.circle].endpoint_tok[m.at.pos]},
                {m.at.circle, toks[m.at.circle].endpoint_tok[q1]},
                {m.at2.circle, toks[m.at2.circle].endpoint_tok[m.at2.pos]},
                {m.at2.circle, toks[m.at2.circle].endpoint_tok[q2]}};
            std::sort(slots.begin(), slots.end());
            if (std::adjacent_find(slots.begin(), slots.end()) != slots.end()) bad_site();
            for (auto it = slots.rbegin(); it != slots.rend(); ++it)
                toks[it->first].toks.erase(toks[it->first].toks.begin() + it->second);
            break;
        }
        case MoveKind::r3: {
            std::array<Adj, 3> inst;
            for (int t = 0; t < 3; ++t) {
                const EndpointPos& p = m.sites[t];
                ChordId cf = endpoint_at(p);
                int q = check_adj(p);
                ChordId cs = d.circle(p.circle)[q];
                if (cf == cs) bad_site();
                inst[t] = Adj{p.circle, p.pos, q, cf, cs};
            }
            auto descr = r3_descriptor(d, inst[0], inst[1], inst[2]);
            if (!descr || !r3_enabled(*descr)) bad_site();
            for (const Adj& a : inst) {
                auto& c = toks[a.ci];
                std::swap(c.toks[c.endpoint_tok[a.p]], c.toks[c.endpoint_tok[a.q]]);
            }
            break;
        }
        case MoveKind::m1_add: {
            check_gap(doc, m.circle, m.gap);
            auto& c = toks[m.circle];
            c.toks.insert(c.toks.begin() + insert_index(c, m.gap), 2, -1);
            break;
        }
        case MoveKind::m1_remove: {
            check_gap(doc, m.circle, m.gap);
            if (marks[m.circle][m.gap] < 2) bad_site();
            auto& c = toks[m.circle];
            int end = insert_index(c, m.gap);
            c.toks.erase(c.toks.begin() + (end - 2), c.toks.begin() + end);
            break;
        }
        case MoveKind::m2: {
            check_gap(doc, m.circle, m.gap);
            int n = d.circle_size(m.circle);
            if (n == 0 || marks[m.circle][m.gap] < 1) bad_site();
            auto& c = toks[m.circle];
            if (m.direction > 0) {
                int e = c.endpoint_tok[m.gap];
                c.toks.erase(c.toks.begin() + (e - 1));
                c.toks.insert(c.toks.begin() + e, -1);
            } else if (m.direction < 0) {
                int first = c.endpoint_tok[m.gap] - marks[m.circle][m.gap];
                int prev_e = c.endpoint_tok[(m.gap - 1 + n) % n];
                c.toks.erase(c.toks.begin() + first);
                if (prev_e > first) --prev_e;
                c.toks.insert(c.toks.begin() + prev_e, -1);
            } else {
                bad_site();
            }
            break;
        }
    }
    return rebuild(doc.name, toks, signs);
}

bool preserves_orientability(const Document& doc, const MoveSpec& m) {
    return is_orientable(apply_move(doc, m).diagram);
}

Walk random_walk(const Document& doc, int steps, std::uint64_t seed, WalkPolicy policy,
                 std::optional<int> max_chords) {
    Walk w;
    w.start = doc;
    std::mt19937_64 rng(seed);
    Document cur = doc;
    for (int s = 0; s < steps; ++s) {
        std::vector<std::pair<MoveSpec, Document>> candidates;
        for (const MoveSpec& m : enumerate_moves(cur)) {
            Document next = apply_move(cur, m);
            if (max_chords && next.diagram.num_chords() > *max_chords) continue;
            if (policy == WalkPolicy::orientability_preserving && !is_orientable(next.diagram))
                continue;
            candidates.push_back({m, std::move(next)});
        }
        if (candidates.empty()) break;
        auto& pick = candidates[rng() % candidates.size()];
        w.steps.push_back({pick.first, pick.second});
        cur = pick.second;
    }
    return w;
}

}  // namespace vlink
