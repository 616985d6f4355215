#pragma once

#include <string>
#include <vector>

#include "vlink/diagram.hpp"
#include "vlink/laurent.hpp"

namespace vlink {

struct Enumerated {
    SignedChordDiagram diagram;
    std::string code;
};

// all diagrams with exactly the given chord and circle counts, one per
// canonical class, sorted by code
std::vector<Enumerated> enumerate_slice(int chords, int circles);

// union of slices: 0..max_chords chords on 1..max_circles circles
std::vector<Enumerated> enumerate_diagrams(int max_chords, int max_circles);

std::vector<Enumerated> search_by_bracket(const LaurentPoly& target, int max_chords,
                                          int max_circles);

}  // namespace vlink
