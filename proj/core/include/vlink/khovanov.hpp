#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vlink/diagram.hpp"
#include "vlink/laurent.hpp"

namespace vlink {

// chord cap from VLINK_KHOVANOV_CHORD_CAP, default 12
int khovanov_chord_cap();

// i = (w - a + b)/2 and the quantum shift (3w - a + b)/2 of a state
int homological_grading(const SignedChordDiagram& d, State s);
int quantum_shift(const SignedChordDiagram& d, State s);

// graded rank of the chain group of one state: q^shift (q + q^-1)^{|s|}
LaurentPoly chain_ranks(const SignedChordDiagram& d, State s);

struct Generator {
    State state = 0;
    // one bit per component of resolve(d, state), components ordered by
    // smallest contained arc; bit set = label x, clear = label 1
    std::uint32_t labeling = 0;
    auto operator<=>(const Generator&) const = default;
};

using Bigrade = std::pair<int, int>;                     // (i, j)
using SparseMat = std::map<std::pair<int, int>, Coeff>;  // (row, col) -> entry

struct KhovanovComplex {
    int chords = 0;
    int writhe = 0;
    std::map<Bigrade, std::vector<Generator>> gens;  // basis, sorted (state, labeling)
    std::map<Bigrade, SparseMat> diff;               // source (i,j) -> matrix into (i+1,j)
};

KhovanovComplex build_complex(const SignedChordDiagram& d,
                              std::optional<int> cap = std::nullopt);

struct HomologyEntry {
    int betti = 0;
    std::vector<Coeff> torsion;  // elementary divisors > 1, ascending
    bool operator==(const HomologyEntry&) const = default;
};
using HomologyTable = std::map<Bigrade, HomologyEntry>;  // nonzero groups only

HomologyTable homology(const KhovanovComplex& c);

// smith normal form diagonal (positive, divisibility chain), exact arithmetic
std::vector<Coeff> smith_divisors(std::vector<std::vector<Coeff>> m);

struct DsqEntry {
    Generator src, dst;  // witnesses; dst lives at (i+2, j)
    Coeff coeff;
    int i = 0, j = 0;
};

struct DsqReport {
    std::vector<DsqEntry> entries;
    std::vector<LaurentPoly> state_ranks;  // per state, graded rank in q
    std::vector<int> state_i, state_shift, state_comps;
    bool clean() const { return entries.empty(); }
};

DsqReport dsq_defect(const SignedChordDiagram& d, std::optional<int> cap = std::nullopt);

struct EulerReport {
    LaurentPoly k_chain;      // K from chain ranks, in q
    LaurentPoly k_homology;   // K from betti numbers, in q
    LaurentPoly f;            // jones_f, in A
    LaurentPoly k_chain_a;    // the two K's at q = -A^-2
    LaurentPoly k_homology_a;
    bool chain_matches = false;
    bool homology_matches = false;
};

EulerReport euler_identity(const SignedChordDiagram& d, std::optional<int> cap = std::nullopt);

}  // namespace vlink
