#include "vlink/khovanov.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "vlink/bracket.hpp"
#include "vlink/orientation.hpp"

namespace vlink {

namespace {

int env_cap(const char* name, int dflt) {
    const char* v = std::getenv(name);
    if (!v || !*v) return dflt;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || n < 0) return dflt;
    return static_cast<int>(n);
}

void check_cap(int chords, std::optional<int> cap) {
    int limit = cap.value_or(khovanov_chord_cap());
    if (limit > 30) throw CapError("khovanov: chord caps above 30 are not supported");
    if (chords > limit)
        throw CapError("khovanov: " + std::to_string(chords) + " chords exceeds the cap of " +
                       std::to_string(limit));
}

// sorted arc set per component; components keep the smallest-arc order
std::vector<std::vector<int>> arc_sets(const SignedChordDiagram& d, State s) {
    ResolvedCurve rc = resolve(d, s);
    std::vector<std::vector<int>> out;
    out.reserve(rc.components.size());
    for (const auto& comp : rc.components) {
        std::vector<int> arcs;
        arcs.reserve(comp.size());
        for (const auto& [arc, dir] : comp) arcs.push_back(arc);
        std::sort(arcs.begin(), arcs.end());
        out.push_back(std::move(arcs));
    }
    return out;
}

int label_degree(std::uint32_t lab, int comps) { return comps - 2 * __builtin_popcount(lab); }

int gen_index(const std::vector<Generator>& bucket, Generator g) {
    auto it = std::lower_bound(bucket.begin(), bucket.end(), g);
    if (it == bucket.end() || !(*it == g))
        throw std::logic_error("khovanov: generator missing from its bigrade");
    return static_cast<int>(it - bucket.begin());
}

struct Cube {
    int chords = 0;
    int writhe = 0;
    std::vector<std::vector<std::vector<int>>> comps;  // per state
    std::vector<int> grade, shift;                     // per state
    std::map<Bigrade, std::vector<Generator>> gens;
    std::map<Bigrade, SparseMat> diff;
};

// the differential cube; naive = keep component-preserving edges as zero maps
Cube build_cube(const SignedChordDiagram& d, std::optional<int> cap, bool naive) {
    check_cap(d.num_chords(), cap);
    Cube cu;
    cu.chords = d.num_chords();
    cu.writhe = d.writhe();
    std::uint64_t total = std::uint64_t{1} << cu.chords;
    cu.comps.resize(total);
    cu.grade.resize(total);
    cu.shift.resize(total);
    auto fill = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t s = lo; s < hi; ++s) {
            cu.comps[s] = arc_sets(d, static_cast<State>(s));
            int b = count_negative(static_cast<State>(s));
            cu.grade[s] = (cu.writhe - cu.chords) / 2 + b;
            cu.shift[s] = (3 * cu.writhe - cu.chords) / 2 + b;
        }
    };
    unsigned nw = cu.chords >= 10 ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    if (nw > 16) nw = 16;
    if (nw <= 1) {
        fill(0, total);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = total / nw, lo = 0;
        for (unsigned w = 0; w < nw; ++w) {
            std::uint64_t hi = w + 1 == nw ? total : lo + chunk;
            pool.emplace_back(fill, lo, hi);
            lo = hi;
        }
        for (auto& t : pool) t.join();
    }

    // basis per bigrade, sorted by (state, labeling)
    for (std::uint64_t s = 0; s < total; ++s) {
        int n = static_cast<int>(cu.comps[s].size());
        for (std::uint32_t lab = 0; lab < (1u << n); ++lab) {
            int j = cu.shift[s] + label_degree(lab, n);
            cu.gens[{cu.grade[s], j}].push_back({static_cast<State>(s), lab});
        }
    }

    for (std::uint64_t s = 0; s < total; ++s) {
        const auto& cs = cu.comps[s];
        int n_s = static_cast<int>(cs.size());
        int i = cu.grade[s];
        for (int k = 0; k < cu.chords; ++k) {
            if ((s >> k) & 1) continue;
            std::uint64_t t = s | (std::uint64_t{1} << k);
            const auto& ct = cu.comps[t];
            int n_t = static_cast<int>(ct.size());
            Coeff sign = __builtin_popcountll(s >> (k + 1)) % 2 ? -1 : 1;

            if (n_t == n_s) {
                if (!naive)
                    throw std::logic_error("khovanov: component-preserving edge survived the "
                                           "orientability gate");
                // zero partial is safe: the two chain groups at these states
                // sit in disjoint quantum degrees (same component count, shift
                // offset by one)
                if (cu.shift[t] != cu.shift[s] + 1)
                    throw std::logic_error("khovanov: preserving edge with non-adjacent shifts");
                continue;
            }

            std::map<std::vector<int>, int> t_index;
            for (int a = 0; a < n_t; ++a) t_index[ct[a]] = a;
            std::vector<int> match_st(n_s, -1);
            std::vector<char> t_hit(n_t, 0);
            std::vector<int> touched_s;
            for (int a = 0; a < n_s; ++a) {
                auto it = t_index.find(cs[a]);
                if (it == t_index.end()) {
                    touched_s.push_back(a);
                } else {
                    match_st[a] = it->second;
                    t_hit[it->second] = 1;
                }
            }
            std::vector<int> touched_t;
            for (int a = 0; a < n_t; ++a)
                if (!t_hit[a]) touched_t.push_back(a);

            auto add = [&](std::uint32_t slab, std::uint32_t tlab) {
                int j = cu.shift[s] + label_degree(slab, n_s);
                int col = gen_index(cu.gens.at({i, j}), {static_cast<State>(s), slab});
                int row = gen_index(cu.gens.at({i + 1, j}), {static_cast<State>(t), tlab});
                auto& m = cu.diff[{i, j}];
                auto [slot, fresh] = m.emplace(std::pair{row, col}, sign);
                if (!fresh) {
                    slot->second += sign;
                    if (slot->second == 0) m.erase(slot);
                }
            };
            auto carry = [&](std::uint32_t lab) {
                std::uint32_t base = 0;
                for (int q = 0; q < n_s; ++q)
                    if (match_st[q] >= 0 && ((lab >> q) & 1)) base |= 1u << match_st[q];
                return base;
            };

            if (n_t == n_s - 1) {
                if (touched_s.size() != 2 || touched_t.size() != 1)
                    throw std::logic_error("khovanov: malformed merge edge");
                for (std::uint32_t lab = 0; lab < (1u << n_s); ++lab) {
                    int a = (lab >> touched_s[0]) & 1;
                    int b = (lab >> touched_s[1]) & 1;
                    if (a && b) continue;
                    std::uint32_t tlab = carry(lab);
                    if (a | b) tlab |= 1u << touched_t[0];
                    add(lab, tlab);
                }
            } else if (n_t == n_s + 1) {
                if (touched_s.size() != 1 || touched_t.size() != 2)
                    throw std::logic_error("khovanov: malformed split edge");
                for (std::uint32_t lab = 0; lab < (1u << n_s); ++lab) {
                    std::uint32_t base = carry(lab);
                    if ((lab >> touched_s[0]) & 1) {
                        add(lab, base | (1u << touched_t[0]) | (1u << touched_t[1]));
                    } else {
                        add(lab, base | (1u << touched_t[1]));
                        add(lab, base | (1u << touched_t[0]));
                    }
                }
            } else {
                throw std::logic_error("khovanov: edge changes component count by more than one");
            }
        }
    }
    return cu;
}

}  // namespace

int khovanov_chord_cap() { return env_cap("VLINK_KHOVANOV_CHORD_CAP", 12); }

int homological_grading(const SignedChordDiagram& d, State s) {
    return (d.writhe() - d.num_chords()) / 2 + count_negative(s);
}

int quantum_shift(const SignedChordDiagram& d, State s) {
    return (3 * d.writhe() - d.num_chords()) / 2 + count_negative(s);
}

LaurentPoly chain_ranks(const SignedChordDiagram& d, State s) {
    LaurentPoly loop =
        LaurentPoly::monomial(1, 1, 'q') + LaurentPoly::monomial(1, -1, 'q');
    LaurentPoly r = loop.pow(static_cast<unsigned>(resolve(d, s).count()));
    r.mul_monomial(1, quantum_shift(d, s));
    return r;
}

KhovanovComplex build_complex(const SignedChordDiagram& d, std::optional<int> cap) {
    if (!is_orientable(d))
        throw DomainError(
            "khovanov: the diagram is non-orientable, so the complex is undefined; "
            "the dsq diagnostic reports the d^2 defect");
    Cube cu = build_cube(d, cap, false);
    return {cu.chords, cu.writhe, std::move(cu.gens), std::move(cu.diff)};
}

std::vector<Coeff> smith_divisors(std::vector<std::vector<Coeff>> m) {
    using boost::multiprecision::abs;
    std::vector<Coeff> divisors;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        size_t pr = rows, pc = cols;
        Coeff best = 0;
        for (size_t i = r0; i < rows; ++i)
            for (size_t j = c0; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                Coeff a = abs(m[i][j]);
                if (pr == rows || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == rows) break;
        std::swap(m[r0], m[pr]);
        if (pc != c0)
            for (auto& row : m) std::swap(row[c0], row[pc]);

        bool again = true;
        while (again) {
            again = false;
            Coeff p = m[r0][c0];
            for (size_t i = r0 + 1; i < rows; ++i) {
                Coeff q = m[i][c0] / p;
                if (q != 0)
                    for (size_t j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
                if (m[i][c0] != 0) {
                    std::swap(m[r0], m[i]);
                    again = true;
                    break;
                }
            }
            if (again) continue;
            for (size_t j = c0 + 1; j < cols; ++j) {
                Coeff q = m[r0][j] / p;
                if (q != 0)
                    for (size_t i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
                if (m[r0][j] != 0) {
                    for (size_t i = r0; i < rows; ++i) std::swap(m[i][c0], m[i][j]);
                    again = true;
                    break;
                }
            }
        }

        Coeff p = abs(m[r0][c0]);
        bool fixed = false;
        for (size_t i = r0 + 1; i < rows && !fixed; ++i)
            for (size_t j = c0 + 1; j < cols && !fixed; ++j)
                if (m[i][j] % p != 0) {
                    for (size_t jj = c0; jj < cols; ++jj) m[r0][jj] += m[i][jj];
                    fixed = true;
                }
        if (fixed) continue;
        divisors.push_back(p);
        ++r0;
        ++c0;
    }
    return divisors;
}

HomologyTable homology(const KhovanovComplex& c) {
    std::map<Bigrade, int> dims;
    for (const auto& [ij, v] : c.gens) dims[ij] = static_cast<int>(v.size());

    std::map<Bigrade, std::vector<Coeff>> snf;
    for (const auto& [ij, m] : c.diff) {
        auto tgt = dims.find({ij.first + 1, ij.second});
        int nr = tgt == dims.end() ? 0 : tgt->second;
        std::vector<std::vector<Coeff>> dense(nr, std::vector<Coeff>(dims.at(ij), 0));
        for (const auto& [rc, v] : m) dense[rc.first][rc.second] = v;
        snf[ij] = smith_divisors(std::move(dense));
    }

    HomologyTable out;
    for (const auto& [ij, dim] : dims) {
        auto out_it = snf.find(ij);
        int rk_out = out_it == snf.end() ? 0 : static_cast<int>(out_it->second.size());
        auto in_it = snf.find({ij.first - 1, ij.second});
        int rk_in = in_it == snf.end() ? 0 : static_cast<int>(in_it->second.size());
        HomologyEntry e;
        e.betti = dim - rk_out - rk_in;
        if (in_it != snf.end())
            for (const Coeff& dv : in_it->second)
                if (dv > 1) e.torsion.push_back(dv);
        if (e.betti != 0 || !e.torsion.empty()) out[ij] = std::move(e);
    }
    return out;
}

DsqReport dsq_defect(const SignedChordDiagram& d, std::optional<int> cap) {
    Cube cu = build_cube(d, cap, true);
    DsqReport rep;
    std::uint64_t total = std::uint64_t{1} << cu.chords;
    LaurentPoly loop =
        LaurentPoly::monomial(1, 1, 'q') + LaurentPoly::monomial(1, -1, 'q');
    for (std::uint64_t s = 0; s < total; ++s) {
        int n = static_cast<int>(cu.comps[s].size());
        LaurentPoly r = loop.pow(static_cast<unsigned>(n));
        r.mul_monomial(1, cu.shift[s]);
        rep.state_ranks.push_back(std::move(r));
        rep.state_i.push_back(cu.grade[s]);
        rep.state_shift.push_back(cu.shift[s]);
        rep.state_comps.push_back(n);
    }

    for (const auto& [ij, first] : cu.diff) {
        auto next = cu.diff.find({ij.first + 1, ij.second});
        if (next == cu.diff.end()) continue;
        std::map<int, std::vector<std::pair<int, Coeff>>> by_col;
        for (const auto& [rc, v] : next->second) by_col[rc.second].push_back({rc.first, v});

        std::map<std::pair<int, int>, Coeff> acc;  // (src col, dst row)
        for (const auto& [rc, v] : first) {
            auto mid = by_col.find(rc.first);
            if (mid == by_col.end()) continue;
            for (const auto& [row2, v2] : mid->second) acc[{rc.second, row2}] += v2 * v;
        }

        const std::vector<Generator>* src = nullptr;
        const std::vector<Generator>* dst = nullptr;
        for (const auto& [cr, v] : acc) {
            if (v == 0) continue;
            if (!src) {
                src = &cu.gens.at(ij);
                dst = &cu.gens.at({ij.first + 2, ij.second});
            }
            rep.entries.push_back(
                {(*src)[cr.first], (*dst)[cr.second], v, ij.first, ij.second});
        }
    }
    return rep;
}

EulerReport euler_identity(const SignedChordDiagram& d, std::optional<int> cap) {
    KhovanovComplex c = build_complex(d, cap);
    EulerReport rep;
    rep.k_chain = LaurentPoly::zero('q');
    for (const auto& [ij, v] : c.gens) {
        Coeff n(v.size());
        if (ij.first % 2 != 0) n = -n;
        rep.k_chain += LaurentPoly::monomial(n, ij.second, 'q');
    }
    rep.k_homology = LaurentPoly::zero('q');
    for (const auto& [ij, h] : homology(c)) {
        if (!h.betti) continue;
        Coeff n(h.betti);
        if (ij.first % 2 != 0) n = -n;
        rep.k_homology += LaurentPoly::monomial(n, ij.second, 'q');
    }
    rep.f = jones_f(d);
    rep.k_chain_a = rep.k_chain.substitute_q_to_A();
    rep.k_homology_a = rep.k_homology.substitute_q_to_A();
    rep.chain_matches = rep.k_chain_a == rep.f;
    rep.homology_matches = rep.k_homology_a == rep.f;
    return rep;
}

}  // namespace vlink
