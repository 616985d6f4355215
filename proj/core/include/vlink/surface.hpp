#pragma once

#include <array>
#include <vector>

#include "vlink/diagram.hpp"

namespace vlink {

// darts are directed arc sides: arc*2 runs tail->head, arc*2+1 head->tail
inline int dart(int arc, int dir) { return arc * 2 + (dir > 0 ? 0 : 1); }
inline int dart_arc(int d) { return d / 2; }
inline int dart_dir(int d) { return d % 2 == 0 ? 1 : -1; }

struct Face {
    std::vector<int> darts;  // empty for the two faces of a chord-free circle
    int component = 0;
};

struct SurfaceComponent {
    std::vector<int> circles;
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int chi = 0;
    int genus = 0;
};

struct FaceSet {
    std::vector<std::array<int, 4>> rotation;  // per chord, out-darts in ccw order
    std::vector<Face> faces;
    std::vector<SurfaceComponent> components;
    int total_genus = 0;
};

FaceSet faces(const GaussDiagram& g);
int genus(const GaussDiagram& g);

struct Checkerboard {
    bool colorable = false;
    std::vector<int> face_colors;  // per face index, 0/1; empty when not colorable
};

Checkerboard checkerboard(const GaussDiagram& g);

}  // namespace vlink
