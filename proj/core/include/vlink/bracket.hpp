#pragma once

#include <optional>

#include "vlink/diagram.hpp"
#include "vlink/laurent.hpp"

namespace vlink {

// chord cap from VLINK_BRACKET_CHORD_CAP, default 24
int bracket_chord_cap();

LaurentPoly kauffman_bracket(const SignedChordDiagram& d,
                             std::optional<int> cap = std::nullopt);
LaurentPoly jones_f(const SignedChordDiagram& d, std::optional<int> cap = std::nullopt);

}  // namespace vlink
