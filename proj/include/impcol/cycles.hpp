#pragma once

#include "impcol/graph.hpp"
#include "impcol/plane_graph.hpp"

#include <deque>
#include <optional>

namespace impcol {

namespace detail {

// Simple paths from `start` through vertices with larger ids; true once a path of
// `len` vertices closes back to `start`.
inline bool close_cycle(const Graph& g, VertexId start, VertexId v, int depth, int len,
                        std::set<VertexId>& on_path)
{
    if (depth == len)
        return g.has_edge(v, start);
    for (VertexId w : g.neighbors(v)) {
        if (w <= start || on_path.count(w))
            continue;
        on_path.insert(w);
        bool found = close_cycle(g, start, w, depth + 1, len, on_path);
        on_path.erase(w);
        if (found)
            return true;
    }
    return false;
}

} // namespace detail

/// True iff g has a cycle on exactly `len` vertices (not necessarily induced).
inline bool has_cycle_of_length(const Graph& g, int len)
{
    if (len < 3)
        throw ArgumentError("cycle length must be at least 3, got " + std::to_string(len));
    if (static_cast<std::size_t>(len) > g.num_vertices())
        return false;
    std::set<VertexId> on_path;
    for (VertexId s : g.vertices()) {
        if (g.degree(s) < 2)
            continue;
        on_path = {s};
        if (detail::close_cycle(g, s, s, 1, len, on_path))
            return true;
    }
    return false;
}

/// Length of a shortest cycle; nullopt for forests.
inline std::optional<int> girth(const Graph& g)
{
    std::optional<int> best;
    for (VertexId s : g.vertices()) {
        std::map<VertexId, int> dist{{s, 0}};
        std::map<VertexId, VertexId> parent{{s, s}};
        std::deque<VertexId> queue{s};
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            if (best && 2 * dist[u] >= *best)
                break;
            for (VertexId w : g.neighbors(u)) {
                auto it = dist.find(w);
                if (it == dist.end()) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    int len = dist[u] + it->second + 1;
                    if (!best || len < *best)
                        best = len;
                }
            }
        }
    }
    return best;
}

/// Membership in the class of plane graphs with no cycle of length 3, 4 or 6.
inline bool in_class_C(const PlaneGraph& pg)
{
    if (!euler_check(pg).is_plane)
        return false;
    const Graph& g = pg.graph();
    return !has_cycle_of_length(g, 3) && !has_cycle_of_length(g, 4) && !has_cycle_of_length(g, 6);
}

/// Number of vertices of degree at least 3.
inline int n3(const Graph& g)
{
    int count = 0;
    for (VertexId v : g.vertices())
        if (g.degree(v) >= 3)
            ++count;
    return count;
}

/// Strict order used for minimal counterexamples: fewer 3+-vertices, or fewer
/// vertices without more 3+-vertices.
inline bool precedes(const Graph& a, const Graph& b)
{
    const int na = n3(a);
    const int nb = n3(b);
    return (a.num_vertices() < b.num_vertices() && na <= nb) || na < nb;
}

} // namespace impcol
