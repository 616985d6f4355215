#include "vlink/surface.hpp"

#include <algorithm>
#include <numeric>

namespace vlink {

namespace {

struct CircleUF {
    std::vector<int> parent;
    explicit CircleUF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

FaceSet faces(const GaussDiagram& g) {
    const auto& d = g.diagram;
    FaceSet fs;

    int nd = d.arc_count() * 2;
    std::vector<int> sigma(nd, -1);
    fs.rotation.reserve(d.num_chords());
    for (ChordId ch = 0; ch < d.num_chords(); ++ch) {
        EndpointPos eo = g.over_end(ch), eu = g.under_end(ch);
        int over_out = dart(d.out_arc(eo), 1), over_in = dart(d.in_arc(eo), -1);
        int under_out = dart(d.out_arc(eu), 1), under_in = dart(d.in_arc(eu), -1);
        std::array<int, 4> rot =
            d.sign(ch) > 0 ? std::array<int, 4>{over_out, under_out, over_in, under_in}
                           : std::array<int, 4>{over_out, under_in, over_in, under_out};
        for (int i = 0; i < 4; ++i) sigma[rot[i]] = rot[(i + 1) % 4];
        fs.rotation.push_back(rot);
    }

    CircleUF uf(d.num_circles());
    for (ChordId ch = 0; ch < d.num_chords(); ++ch)
        uf.unite(d.ends(ch)[0].circle, d.ends(ch)[1].circle);
    std::vector<int> comp_of_circle(d.num_circles(), -1);
    for (int ci = 0; ci < d.num_circles(); ++ci) {
        int r = uf.find(ci);
        if (comp_of_circle[r] < 0) {
            comp_of_circle[r] = static_cast<int>(fs.components.size());
            fs.components.push_back({});
        }
        comp_of_circle[ci] = comp_of_circle[r];
        fs.components[comp_of_circle[ci]].circles.push_back(ci);
    }
    for (ChordId ch = 0; ch < d.num_chords(); ++ch)
        fs.components[comp_of_circle[d.ends(ch)[0].circle]].vertices += 1;
    for (int ci = 0; ci < d.num_circles(); ++ci)
        if (d.circle_size(ci) > 0)
            fs.components[comp_of_circle[ci]].edges += d.circle_size(ci);

    // faces: orbits of phi(dart) = sigma[reverse(dart)], started at the
    // smallest unvisited dart
    std::vector<char> seen(nd, 0);
    for (int start = 0; start < nd; ++start) {
        if (seen[start] || sigma[start] < 0) continue;
        Face f;
        f.component = comp_of_circle[d.arc_start(dart_arc(start)).circle];
        int cur = start;
        do {
            seen[cur] = 1;
            f.darts.push_back(cur);
            cur = sigma[cur ^ 1];
        } while (cur != start);
        fs.components[f.component].faces += 1;
        fs.faces.push_back(std::move(f));
    }
    // a chord-free circle caps to a sphere on its own: two faces, no darts
    for (int ci = 0; ci < d.num_circles(); ++ci) {
        if (d.circle_size(ci) != 0) continue;
        int comp = comp_of_circle[ci];
        fs.components[comp].faces = 2;
        fs.faces.push_back(Face{{}, comp});
        fs.faces.push_back(Face{{}, comp});
    }

    for (auto& c : fs.components) {
        c.chi = c.vertices - c.edges + c.faces;
        c.genus = (2 - c.chi) / 2;
        fs.total_genus += c.genus;
    }
    return fs;
}

int genus(const GaussDiagram& g) { return faces(g).total_genus; }

Checkerboard checkerboard(const GaussDiagram& g) {
    const auto& d = g.diagram;
    FaceSet fs = faces(g);
    int nf = static_cast<int>(fs.faces.size());

    std::vector<int> face_of_dart(d.arc_count() * 2, -1);
    for (int fi = 0; fi < nf; ++fi)
        for (int dt : fs.faces[fi].darts) face_of_dart[dt] = fi;

    std::vector<std::vector<int>> adj(nf);
    for (int a = 0; a < d.arc_count(); ++a) {
        int f0 = face_of_dart[dart(a, 1)], f1 = face_of_dart[dart(a, -1)];
        if (f0 < 0) continue;  // closed arc of a chord-free circle
        adj[f0].push_back(f1);
        adj[f1].push_back(f0);
    }
    // the two faces of a chord-free circle sit on opposite sides of it
    for (int fi = 0; fi + 1 < nf; ++fi)
        if (fs.faces[fi].darts.empty() && fs.faces[fi + 1].component == fs.faces[fi].component &&
            fs.faces[fi + 1].darts.empty()) {
            adj[fi].push_back(fi + 1);
            adj[fi + 1].push_back(fi);
            ++fi;
        }

    Checkerboard cb;
    std::vector<int> color(nf, -1), stack;
    for (int seed = 0; seed < nf; ++seed) {
        if (color[seed] >= 0) continue;
        color[seed] = 0;
        stack.assign(1, seed);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (color[v] < 0) {
                    color[v] = color[u] ^ 1;
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return cb;
                }
            }
        }
    }
    cb.colorable = true;
    cb.face_colors = std::move(color);
    return cb;
}

}  // namespace vlink
