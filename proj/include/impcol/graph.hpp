#pragma once

#include "impcol/error.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace impcol {

using VertexId = int;

/// Simple undirected graph over arbitrary non-negative ids.
/// Iteration is always ascending by id.
class Graph {
public:
    Graph() = default;

    void add_vertex(VertexId v)
    {
        if (v < 0)
            throw ArgumentError("negative vertex id " + std::to_string(v));
        adj_.try_emplace(v);
    }

    /// Adds u--v, creating endpoints as needed. Self-loops and parallel edges are rejected.
    void add_edge(VertexId u, VertexId v)
    {
        if (u == v)
            throw ArgumentError("self-loop at " + std::to_string(u));
        add_vertex(u);
        add_vertex(v);
        if (!adj_[u].insert(v).second)
            throw ArgumentError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[v].insert(u);
        ++edges_;
    }

    void remove_edge(VertexId u, VertexId v)
    {
        if (!has_edge(u, v))
            throw ArgumentError("no edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[u].erase(v);
        adj_[v].erase(u);
        --edges_;
    }

    void remove_vertex(VertexId v)
    {
        auto it = adj_.find(v);
        if (it == adj_.end())
            throw ArgumentError("no vertex " + std::to_string(v));
        for (VertexId w : it->second)
            adj_[w].erase(v);
        edges_ -= it->second.size();
        adj_.erase(it);
    }

    bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }

    bool has_edge(VertexId u, VertexId v) const
    {
        auto it = adj_.find(u);
        return it != adj_.end() && it->second.count(v) != 0;
    }

    const std::set<VertexId>& neighbors(VertexId v) const
    {
        auto it = adj_.find(v);
        if (it == adj_.end())
            throw ArgumentError("no vertex " + std::to_string(v));
        return it->second;
    }

    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return edges_; }
    bool empty() const { return adj_.empty(); }

    std::vector<VertexId> vertices() const
    {
        std::vector<VertexId> out;
        out.reserve(adj_.size());
        for (const auto& [v, _] : adj_)
            out.push_back(v);
        return out;
    }

    /// Edges as (u, v) with u < v, lexicographic.
    std::vector<std::pair<VertexId, VertexId>> edges() const
    {
        std::vector<std::pair<VertexId, VertexId>> out;
        out.reserve(edges_);
        for (const auto& [u, nbrs] : adj_)
            for (VertexId v : nbrs)
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    /// Smallest id strictly greater than every id in use (0 for the empty graph).
    VertexId next_free_id() const { return adj_.empty() ? 0 : adj_.rbegin()->first + 1; }

    const std::map<VertexId, std::set<VertexId>>& adjacency() const { return adj_; }

    Graph induced(const std::set<VertexId>& keep) const
    {
        Graph h;
        for (VertexId v : keep)
            if (has_vertex(v))
                h.add_vertex(v);
        for (auto [u, v] : edges())
            if (keep.count(u) && keep.count(v))
                h.add_edge(u, v);
        return h;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::map<VertexId, std::set<VertexId>> adj_;
    std::size_t edges_ = 0;
};

inline Graph make_cycle(int n, VertexId first = 0)
{
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_edge(first + i, first + (i + 1) % n);
    return g;
}

inline Graph make_path(int n, VertexId first = 0)
{
    Graph g;
    g.add_vertex(first);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(first + i, first + i + 1);
    return g;
}

inline Graph make_complete(int n)
{
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

/// K_{1,leaves} with center 0.
inline Graph make_star(int leaves)
{
    Graph g;
    g.add_vertex(0);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

/// Every edge replaced by a path with `times` internal vertices; new ids are allocated
/// after the existing ones, edge by edge in ascending order.
inline Graph subdivide_edges(const Graph& g, int times)
{
    Graph h;
    for (VertexId v : g.vertices())
        h.add_vertex(v);
    VertexId next = g.next_free_id();
    for (auto [u, v] : g.edges()) {
        VertexId prev = u;
        for (int i = 0; i < times; ++i) {
            h.add_edge(prev, next);
            prev = next++;
        }
        h.add_edge(prev, v);
    }
    return h;
}

/// Connected components, each sorted ascending; components ordered by their lowest vertex.
inline std::vector<std::vector<VertexId>> connected_components(const Graph& g)
{
    std::vector<std::vector<VertexId>> comps;
    std::set<VertexId> seen;
    for (VertexId s : g.vertices()) {
        if (seen.count(s))
            continue;
        std::vector<VertexId> comp;
        std::vector<VertexId> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v))
                if (seen.insert(w).second)
                    stack.push_back(w);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

} // namespace impcol
