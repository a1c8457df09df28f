#pragma once

#include "impcol/graph.hpp"

namespace impcol {

/// Removes v (3 <= d(v) <= 7) and adds 2-vertices v_1..v_{d-1}, v_i joined to w and
/// to the i-th other neighbor of v (ascending). Fresh ids follow the existing ones.
inline Graph surgery_vertex_split(const Graph& g, VertexId v, VertexId w)
{
    if (!g.has_vertex(v) || !g.has_edge(v, w))
        throw ArgumentError("vertex split needs an edge v-w");
    const int d = g.degree(v);
    if (d < 3 || d > 7)
        throw ArgumentError("vertex split needs 3 <= d(v) <= 7, got " + std::to_string(d));
    std::vector<VertexId> others;
    for (VertexId x : g.neighbors(v))
        if (x != w)
            others.push_back(x);
    Graph h = g;
    h.remove_vertex(v);
    VertexId next = g.next_free_id();
    for (VertexId wi : others) {
        const VertexId vi = next++;
        h.add_edge(vi, w);
        h.add_edge(vi, wi);
    }
    return h;
}

/// Removes a 3-vertex w and its 2-neighbor v; with u the other neighbor of v and
/// x1 < x2 the other neighbors of w, adds 2-vertices v1, v2, w1, w2, x (ids in that
/// order) forming the 8-cycle u v1 w1 x1 x x2 w2 v2.
inline Graph surgery_edge_replace(const Graph& g, VertexId w, VertexId v)
{
    if (!g.has_vertex(w) || !g.has_vertex(v) || !g.has_edge(w, v))
        throw ArgumentError("edge replacement needs an edge w-v");
    if (g.degree(w) != 3 || g.degree(v) != 2)
        throw ArgumentError("edge replacement needs d(w) = 3 and d(v) = 2");
    VertexId u = -1;
    for (VertexId t : g.neighbors(v))
        if (t != w)
            u = t;
    std::vector<VertexId> xs;
    for (VertexId t : g.neighbors(w))
        if (t != v)
            xs.push_back(t);
    Graph h = g;
    h.remove_vertex(v);
    h.remove_vertex(w);
    const VertexId base = g.next_free_id();
    const VertexId v1 = base, v2 = base + 1, w1 = base + 2, w2 = base + 3, x = base + 4;
    const std::vector<VertexId> cycle{u, v1, w1, xs[0], x, xs[1], w2, v2};
    for (std::size_t i = 0; i < cycle.size(); ++i)
        h.add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    return h;
}

} // namespace impcol
