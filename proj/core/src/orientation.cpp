#include "vlink/orientation.hpp"

#include <algorithm>
#include <stdexcept>

namespace vlink {

namespace {

// union-find with parity relative to the representative
struct ParityUF {
    std::vector<int> parent;
    std::vector<char> par;  // parity to parent
    explicit ParityUF(int n) : parent(n), par(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    std::pair<int, int> find(int x) {
        int p = 0;
        while (parent[x] != x) {
            p ^= par[x];
            x = parent[x];
        }
        return {x, p};
    }
    // x = y + parity; false on contradiction
    bool unite(int x, int y, int parity) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return (px ^ py) == parity;
        parent[rx] = ry;
        par[rx] = px ^ py ^ parity;
        return true;
    }
};

}  // namespace

std::optional<ChordOrientation> find_orientation(const SignedChordDiagram& d) {
    int n = d.arc_count();
    ParityUF uf(n);
    bool ok = true;
    for (int ci = 0; ci < d.num_circles() && ok; ++ci)
        for (int pos = 0; pos < d.circle_size(ci) && ok; ++pos) {
            EndpointPos p{ci, pos};
            ok = uf.unite(d.in_arc(p), d.out_arc(p), 1);
        }
    for (ChordId ch = 0; ch < d.num_chords() && ok; ++ch) {
        const auto& e = d.ends(ch);
        ok = uf.unite(d.in_arc(e[0]), d.in_arc(e[1]), 1);
    }
    if (!ok) return std::nullopt;
    // the smallest arc of each class points forward; classes are scanned in
    // arc order so the first member seen is the smallest
    std::vector<int> root_parity(n, -1);
    ChordOrientation o;
    o.dir.resize(n);
    for (int a = 0; a < n; ++a) {
        auto [r, p] = uf.find(a);
        if (root_parity[r] < 0) root_parity[r] = p;
        o.dir[a] = (p ^ root_parity[r]) ? ArcDir::backward : ArcDir::forward;
    }
    return o;
}

bool is_orientable(const SignedChordDiagram& d) { return find_orientation(d).has_value(); }

EndpointType endpoint_type(const SignedChordDiagram& d, const ChordOrientation& o,
                           const EndpointPos& p) {
    return o.dir[d.in_arc(p)] == ArcDir::forward ? EndpointType::attractive
                                                 : EndpointType::repulsive;
}

int attractive_occurrence(const SignedChordDiagram& d, const ChordOrientation& o, ChordId ch) {
    return endpoint_type(d, o, d.ends(ch)[0]) == EndpointType::attractive ? 0 : 1;
}

ObstructionReport obstruction(const SignedChordDiagram& d) {
    ObstructionReport rep;
    // chord directions chosen arbitrarily: occurrence 0 demands attractive.
    // Demands at the two ends of an arc must alternate, so the cochain is 1
    // exactly where they agree.  Endpoints are indexed by their out-arc id.
    std::vector<char> demand(d.arc_count(), 0);
    for (ChordId ch = 0; ch < d.num_chords(); ++ch)
        demand[d.out_arc(d.ends(ch)[0])] = 1;

    rep.cochain.assign(d.arc_count(), 0);
    for (int ci = 0; ci < d.num_circles(); ++ci) {
        int n = d.circle_size(ci);
        for (int pos = 0; pos < n; ++pos) {
            int arc = d.arc_id(ci, pos);  // runs endpoint pos -> endpoint pos+1
            bool tail_att = demand[arc];
            bool head_att = demand[d.arc_id(ci, (pos + 1) % n)];
            rep.cochain[arc] = tail_att == head_att ? 1 : 0;
        }
    }

    // underlying graph: vertices = endpoints (= out-arc ids on chorded
    // circles), edges = arcs + chords
    int nv = d.arc_count();
    struct E {
        GraphEdge edge;
        int u, v, value;
    };
    std::vector<E> edges;
    std::vector<std::vector<int>> adj(nv);  // edge indices
    for (int ci = 0; ci < d.num_circles(); ++ci) {
        int n = d.circle_size(ci);
        for (int pos = 0; pos < n; ++pos) {
            int u = d.arc_id(ci, pos);
            int v = d.arc_id(ci, (pos + 1) % n);
            adj[u].push_back(static_cast<int>(edges.size()));
            adj[v].push_back(static_cast<int>(edges.size()));
            edges.push_back({GraphEdge{false, u}, u, v, rep.cochain[u]});
        }
    }
    for (ChordId ch = 0; ch < d.num_chords(); ++ch) {
        int u = d.out_arc(d.ends(ch)[0]);
        int v = d.out_arc(d.ends(ch)[1]);
        adj[u].push_back(static_cast<int>(edges.size()));
        adj[v].push_back(static_cast<int>(edges.size()));
        edges.push_back({GraphEdge{true, ch}, u, v, 0});
    }

    // spanning forest over chorded-circle vertices
    std::vector<char> seen(nv, 0), in_tree(edges.size(), 0), val_to_root(nv, 0);
    std::vector<int> parent_vertex(nv, -1), parent_edge(nv, -1), stack;
    for (int root = 0; root < nv; ++root) {
        if (seen[root] || d.circle_size(d.arc_start(root).circle) == 0) continue;
        seen[root] = 1;
        stack.assign(1, root);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int k : adj[u]) {
                int to = edges[k].u == u ? edges[k].v : edges[k].u;
                if (seen[to]) continue;
                seen[to] = 1;
                parent_vertex[to] = u;
                parent_edge[to] = k;
                in_tree[k] = 1;
                val_to_root[to] = val_to_root[u] ^ edges[k].value;
                stack.push_back(to);
            }
        }
    }
    auto path_to_root = [&](int v) {
        std::vector<GraphEdge> out;
        while (parent_edge[v] >= 0) {
            out.push_back(edges[parent_edge[v]].edge);
            v = parent_vertex[v];
        }
        return out;
    };
    for (size_t k = 0; k < edges.size(); ++k) {
        if (in_tree[k]) continue;
        const E& e = edges[k];
        ObstructionCycle cyc;
        cyc.edges.push_back(e.edge);
        auto pu = path_to_root(e.u), pv = path_to_root(e.v);
        while (!pu.empty() && !pv.empty() && pu.back() == pv.back()) {
            pu.pop_back();
            pv.pop_back();
        }
        for (const auto& ee : pu) cyc.edges.push_back(ee);
        for (auto it = pv.rbegin(); it != pv.rend(); ++it) cyc.edges.push_back(*it);
        cyc.value = e.value ^ val_to_root[e.u] ^ val_to_root[e.v];
        rep.cycles.push_back(std::move(cyc));
    }
    // chord-free circles: one basis cycle each, value 0
    for (int ci = 0; ci < d.num_circles(); ++ci) {
        if (d.circle_size(ci) != 0) continue;
        ObstructionCycle cyc;
        cyc.edges.push_back(GraphEdge{false, d.arc_id(ci, 0)});
        rep.cycles.push_back(std::move(cyc));
    }
    for (const auto& c : rep.cycles)
        if (c.value) rep.orientable = false;
    return rep;
}

ResolvedCurve oriented_resolution(const SignedChordDiagram& d, const ChordOrientation& o,
                                  State s) {
    ResolvedCurve rc = resolve(d, s);
    for (auto& comp : rc.components) {
        auto [arc0, dir0] = comp.front();
        bool flip = (o.dir[arc0] == ArcDir::forward) != (dir0 > 0);
        if (flip) {
            std::reverse(comp.begin(), comp.end());
            for (auto& [a, dd] : comp) dd = -dd;
            std::rotate(comp.begin(), comp.end() - 1, comp.end());
        }
        for (auto& [a, dd] : comp)
            if ((o.dir[a] == ArcDir::forward) != (dd > 0))
                throw std::logic_error("orientation certificate violated");
    }
    return rc;
}

}  // namespace vlink
