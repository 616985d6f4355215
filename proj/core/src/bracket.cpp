#include "vlink/bracket.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

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

}  // namespace

int bracket_chord_cap() { return env_cap("VLINK_BRACKET_CHORD_CAP", 24); }

LaurentPoly kauffman_bracket(const SignedChordDiagram& d, std::optional<int> cap) {
    int c = d.num_chords();
    int limit = cap.value_or(bracket_chord_cap());
    if (limit > 30) throw CapError("bracket: chord caps above 30 are not supported");
    if (c > limit)
        throw CapError("bracket: " + std::to_string(c) + " chords exceeds the cap of " +
                       std::to_string(limit));

    // tally states by (#negative markers, #loops); the polynomial follows
    int cols = d.arc_count() + 1;
    std::vector<std::uint64_t> counts(static_cast<size_t>(c + 1) * cols, 0);
    std::uint64_t total = std::uint64_t{1} << c;

    auto run = [&d, cols](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& out) {
        ComponentCounter cc(d);
        for (std::uint64_t s = lo; s < hi; ++s) {
            State st = static_cast<State>(s);
            out[static_cast<size_t>(count_negative(st)) * cols + cc.count(st)] += 1;
        }
    };

    unsigned nw = c >= 14 ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    if (nw > 16) nw = 16;
    if (nw <= 1) {
        run(0, total, counts);
    } else {
        std::vector<std::vector<std::uint64_t>> partial(nw, counts);
        std::vector<std::thread> pool;
        std::uint64_t chunk = total / nw, lo = 0;
        for (unsigned w = 0; w < nw; ++w) {
            std::uint64_t hi = w + 1 == nw ? total : lo + chunk;
            pool.emplace_back(run, lo, hi, std::ref(partial[w]));
            lo = hi;
        }
        for (auto& t : pool) t.join();
        for (const auto& p : partial)
            for (size_t i = 0; i < counts.size(); ++i) counts[i] += p[i];
    }

    std::vector<LaurentPoly> dpow(cols);
    dpow[0] = LaurentPoly::one('A');
    for (int m = 1; m < cols; ++m) dpow[m] = dpow[m - 1] * LaurentPoly::loop_value();

    LaurentPoly result = LaurentPoly::zero('A');
    for (int b = 0; b <= c; ++b)
        for (int m = 0; m < cols; ++m) {
            std::uint64_t n = counts[static_cast<size_t>(b) * cols + m];
            if (!n) continue;
            LaurentPoly term = dpow[m];
            term.mul_monomial(Coeff(n), c - 2 * b);
            result += term;
        }
    return result;
}

LaurentPoly jones_f(const SignedChordDiagram& d, std::optional<int> cap) {
    LaurentPoly p = kauffman_bracket(d, cap);
    int w = d.writhe();
    p.mul_monomial(w % 2 == 0 ? Coeff(1) : Coeff(-1), -3 * w);
    return p;
}

}  // namespace vlink
