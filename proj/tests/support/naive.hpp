#pragma once

// slow reference implementations, independent of the library's fast paths

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vlink/diagram.hpp"
#include "vlink/laurent.hpp"

namespace naive {

// orientability by trying all 2^arcs direction assignments: a direction
// assignment works when at every endpoint the incoming and outgoing arcs
// point the same way along the circle on exactly one side (one arc keeps the
// base direction, the other reverses), i.e. in-arc and out-arc disagree, and
// the two ends of every chord disagree in attractiveness
inline bool brute_orientable(const vlink::SignedChordDiagram& d) {
    int arcs = d.arc_count();
    if (arcs > 20) throw std::runtime_error("brute_orientable: too many arcs");
    for (std::uint32_t mask = 0; mask < (1u << arcs); ++mask) {
        auto fwd = [&](int a) { return (mask >> a) & 1u; };
        bool ok = true;
        for (int ch = 0; ch < d.num_chords() && ok; ++ch) {
            int att[2];
            for (int e = 0; e < 2; ++e) {
                const auto& p = d.ends(ch)[e];
                bool in_f = fwd(d.in_arc(p)), out_f = fwd(d.out_arc(p));
                if (in_f == out_f) {
                    ok = false;
                    break;
                }
                att[e] = in_f;  // incoming forward = attractive
            }
            if (ok && att[0] == att[1]) ok = false;
        }
        if (ok && d.num_chords() > 0) return true;
        if (ok && d.num_chords() == 0) return true;
    }
    return false;
}

// fraction-free Bareiss rank over the rationals
inline int bareiss_rank(std::vector<std::vector<vlink::Coeff>> m) {
    using vlink::Coeff;
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    Coeff prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int k = c + 1; k < cols; ++k)
                m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

// rank over GF(2)
inline int gf2_rank(const std::vector<std::vector<vlink::Coeff>>& m) {
    std::vector<std::vector<int>> b;
    for (const auto& row : m) {
        std::vector<int> r;
        for (const auto& v : row) r.push_back(static_cast<int>(v % 2 != 0));
        b.push_back(std::move(r));
    }
    int rows = static_cast<int>(b.size());
    int cols = rows ? static_cast<int>(b[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (b[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(b[rank], b[piv]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && b[r][c])
                for (int k = 0; k < cols; ++k) b[r][k] ^= b[rank][k];
        ++rank;
    }
    return rank;
}

// every single-circle double occurrence word of n chords, all sign patterns,
// counted up to relabeling by generate-and-dedupe on a normal form that is
// itself computed by brute rotation — no shared code with the enumerator
inline int dedupe_count_one_circle(int chords) {
    int n = 2 * chords;
    std::vector<int> word(n, -1);
    std::vector<std::vector<int>> words;
    std::vector<int> stack;
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == n) {
            words.push_back(word);
            return;
        }
        if (word[pos] >= 0) {
            self(self, pos + 1, next);
            return;
        }
        for (int q = pos + 1; q < n; ++q) {
            if (word[q] >= 0) continue;
            word[pos] = word[q] = next;
            self(self, pos + 1, next + 1);
            word[pos] = word[q] = -1;
        }
    };
    if (chords == 0) return 1;
    rec(rec, 0, 0);

    std::set<std::string> seen;
    for (const auto& w : words) {
        for (std::uint32_t mask = 0; mask < (1u << chords); ++mask) {
            std::string best;
            for (int rot = 0; rot < n; ++rot) {
                std::map<int, int> ren;
                std::string form;
                for (int k = 0; k < n; ++k) {
                    int ch = w[(rot + k) % n];
                    auto [it, fresh] = ren.emplace(ch, static_cast<int>(ren.size()));
                    form += static_cast<char>('a' + it->second);
                    form += (mask >> ch) & 1u ? '-' : '+';
                }
                if (best.empty() || form < best) best = form;
            }
            seen.insert(best);
        }
    }
    return static_cast<int>(seen.size());
}

}  // namespace naive
