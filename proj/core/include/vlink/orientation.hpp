#pragma once

#include <optional>
#include <vector>

#include "vlink/diagram.hpp"

namespace vlink {

enum class ArcDir { forward, backward };
enum class EndpointType { attractive, repulsive };

// arc directions that fail to extend across every chord endpoint, with one
// attractive and one repulsive end per chord
struct ChordOrientation {
    std::vector<ArcDir> dir;  // per arc id
};

std::optional<ChordOrientation> find_orientation(const SignedChordDiagram& d);
bool is_orientable(const SignedChordDiagram& d);

// attractive <=> incoming arc forward and outgoing arc backward
EndpointType endpoint_type(const SignedChordDiagram& d, const ChordOrientation& o,
                           const EndpointPos& p);
// occurrence index (0/1) of the attractive endpoint: the chord's alternating
// arrow points at it
int attractive_occurrence(const SignedChordDiagram& d, const ChordOrientation& o, ChordId ch);

// edge of the underlying graph (base arcs + chords)
struct GraphEdge {
    bool is_chord = false;
    int index = 0;  // arc id or chord id
    bool operator==(const GraphEdge&) const = default;
};

struct ObstructionCycle {
    std::vector<GraphEdge> edges;  // the defining non-tree edge first
    int value = 0;                 // Z/2 evaluation of the obstruction cochain
};

// Z/2 cochain from a fixed chord direction choice, evaluated on a fundamental
// cycle basis; the class is independent of the choice and vanishes exactly on
// orientable diagrams
struct ObstructionReport {
    bool orientable = true;
    std::vector<int> cochain;  // per arc id
    std::vector<ObstructionCycle> cycles;
};

ObstructionReport obstruction(const SignedChordDiagram& d);

// resolve(d, s) re-traversed so every component follows the arc directions of
// o; throws std::logic_error if o is not a valid orientation certificate
ResolvedCurve oriented_resolution(const SignedChordDiagram& d, const ChordOrientation& o,
                                  State s);

}  // namespace vlink
