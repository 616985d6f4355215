#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vlink/diagram.hpp"

namespace vlink::codec {

struct ParseError {
    int line = 0;  // 1-based; 0 = whole input
    int col = 0;
    std::string message;
};

struct ParseResult {
    std::optional<Document> document;
    std::vector<ParseError> errors;
    bool ok() const { return document.has_value(); }
};

// Text grammar, line oriented.  '#' starts a comment.  An optional header
// line "diagram <name>" precedes "circle:" lines whose tokens are either
// "[O|U]?<int>[+|-]?" endpoints or "*" marks.  Signs must be written on at
// least one endpoint of each chord and agree when repeated; O/U tags are
// all-or-nothing across the diagram and each tagged chord needs exactly one
// O and one U.
ParseResult parse(const std::string& text);

// Canonical text: one "circle:" line per circle, chords numbered from 1 by
// first occurrence, sign printed on the first occurrence only, O/U on every
// endpoint when arrow data is present, "*" marks in place.  Canonical form
// minimizes over circle rotations and permutations of same-length circles;
// circles with chords come first, chord-free circles follow sorted by mark
// count.  parse(serialize(d)) == canonicalize(d).
std::string serialize(const Document& doc);
Document canonicalize(const Document& doc);

std::string canonical_code(const SignedChordDiagram& d);
std::string canonical_code(const GaussDiagram& g);

}  // namespace vlink::codec
