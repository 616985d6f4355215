#include "vlink/search.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "vlink/bracket.hpp"
#include "vlink/codec.hpp"

namespace vlink {

namespace {

constexpr int kMaxChords = 6;
constexpr int kMaxCircles = 3;

void check_bounds(int chords, int circles) {
    if (chords < 0 || circles < 0) throw DomainError("enumeration: negative bounds");
    if (chords > kMaxChords || circles > kMaxCircles)
        throw CapError("enumeration: bounded to " + std::to_string(kMaxChords) + " chords and " +
                       std::to_string(kMaxCircles) + " circles");
}

Document wrap(SignedChordDiagram d) {
    Document doc;
    doc.diagram = std::move(d);
    CircleMarks marks;
    for (int ci = 0; ci < doc.diagram.num_circles(); ++ci)
        marks.gap_counts.push_back(
            std::vector<int>(std::max(doc.diagram.circle_size(ci), 1), 0));
    doc.marks = std::move(marks);
    return doc;
}

// ascending compositions of total into exactly parts nonnegative summands
void compositions(int total, int parts, int minv, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 0) {
        if (total == 0) emit(cur);
        return;
    }
    if (parts == 1) {
        if (total >= minv) {
            cur.push_back(total);
            emit(cur);
            cur.pop_back();
        }
        return;
    }
    for (int v = minv; v * parts <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts - 1, v, cur, emit);
        cur.pop_back();
    }
}

void matchings(std::vector<int>& pair_of, int slots,
               const std::function<void(const std::vector<int>&)>& emit) {
    int first = -1;
    for (int i = 0; i < slots; ++i)
        if (pair_of[i] < 0) {
            first = i;
            break;
        }
    if (first < 0) {
        emit(pair_of);
        return;
    }
    for (int j = first + 1; j < slots; ++j) {
        if (pair_of[j] >= 0) continue;
        pair_of[first] = j;
        pair_of[j] = first;
        matchings(pair_of, slots, emit);
        pair_of[first] = pair_of[j] = -1;
    }
}

}  // namespace

std::vector<Enumerated> enumerate_slice(int chords, int circles) {
    check_bounds(chords, circles);
    std::map<std::string, SignedChordDiagram> words;
    std::vector<int> cur;
    compositions(2 * chords, circles, 0, cur, [&](const std::vector<int>& comp) {
        std::vector<int> circle_of;
        for (int ci = 0; ci < circles; ++ci)
            circle_of.insert(circle_of.end(), comp[ci], ci);
        int slots = 2 * chords;
        std::vector<int> pair_of(slots, -1);
        matchings(pair_of, slots, [&](const std::vector<int>& m) {
            std::vector<ChordId> chord_of(slots, -1);
            ChordId next = 0;
            for (int i = 0; i < slots; ++i)
                if (chord_of[i] < 0) {
                    chord_of[i] = chord_of[m[i]] = next;
                    ++next;
                }
            std::vector<std::vector<ChordId>> cs(circles);
            for (int i = 0; i < slots; ++i) cs[circle_of[i]].push_back(chord_of[i]);
            SignedChordDiagram d(std::move(cs), std::vector<int>(chords, 1));
            std::string code = codec::canonical_code(d);
            if (!words.count(code))
                words.emplace(std::move(code), codec::canonicalize(wrap(d)).diagram);
        });
    });

    std::map<std::string, SignedChordDiagram> out;
    for (const auto& [wcode, wd] : words) {
        for (unsigned mask = 0; mask < (1u << chords); ++mask) {
            std::vector<int> signs(chords);
            for (int k = 0; k < chords; ++k) signs[k] = (mask >> k) & 1u ? -1 : 1;
            SignedChordDiagram d(wd.circles(), std::move(signs));
            std::string code = codec::canonical_code(d);
            if (!out.count(code)) out.emplace(std::move(code), codec::canonicalize(wrap(d)).diagram);
        }
    }
    std::vector<Enumerated> res;
    res.reserve(out.size());
    for (auto& [code, d] : out) res.push_back({std::move(d), code});
    return res;
}

std::vector<Enumerated> enumerate_diagrams(int max_chords, int max_circles) {
    check_bounds(max_chords, max_circles);
    if (max_circles < 1) return {};
    std::vector<Enumerated> all;
    for (int m = 1; m <= max_circles; ++m)
        for (int k = 0; k <= max_chords; ++k) {
            auto part = enumerate_slice(k, m);
            all.insert(all.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
    std::sort(all.begin(), all.end(),
              [](const Enumerated& a, const Enumerated& b) { return a.code < b.code; });
    return all;
}

std::vector<Enumerated> search_by_bracket(const LaurentPoly& target, int max_chords,
                                          int max_circles) {
    std::vector<Enumerated> hits;
    for (auto& e : enumerate_diagrams(max_chords, max_circles))
        if (kauffman_bracket(e.diagram) == target) hits.push_back(std::move(e));
    return hits;
}

}  // namespace vlink
