#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vlink/diagram.hpp"

namespace vlink {

enum class MoveKind { r1_add, r1_remove, r2_add, r2_remove, r3, m1_add, m1_remove, m2 };
std::string move_kind_text(MoveKind k);

enum class R2Variant { nested, interleaved };

// gap g of a circle is the interval just before endpoint g; a chord-free
// circle has the single gap 0
struct MoveSpec {
    MoveKind kind{};
    int circle = -1, gap = -1;    // additions, mark moves
    int circle2 = -1, gap2 = -1;  // second r2_add site
    int sign = 0;                 // r1_add / r2_add sigma
    R2Variant variant = R2Variant::nested;
    ChordId chord = -1, chord2 = -1;     // removals
    EndpointPos at{}, at2{};             // removal adjacency starts
    std::array<ChordId, 3> triple{};     // r3 chords, ascending
    std::array<EndpointPos, 3> sites{};  // r3 adjacency starts
    int direction = 0;                   // m2: +1 forward, -1 backward
    std::string text() const;
};

std::vector<MoveSpec> enumerate_moves(const Document& doc);
Document apply_move(const Document& doc, const MoveSpec& m);
bool preserves_orientability(const Document& doc, const MoveSpec& m);

// r3 sign/configuration variants are gated by a fixed table of canonical
// descriptors validated against bracket invariance
struct R3Descriptor {
    std::array<int, 3> order_bits{};  // per pair (0,1),(0,2),(1,2); 0 = lower chord first
    std::array<int, 3> signs{};
};
R3Descriptor r3_canonical(const R3Descriptor& d);
bool r3_enabled(const R3Descriptor& d);

enum class WalkPolicy { any, orientability_preserving };

struct WalkStep {
    MoveSpec move;
    Document result;
};

struct Walk {
    Document start;
    std::vector<WalkStep> steps;
};

Walk random_walk(const Document& doc, int steps, std::uint64_t seed, WalkPolicy policy,
                 std::optional<int> max_chords = std::nullopt);

}  // namespace vlink
