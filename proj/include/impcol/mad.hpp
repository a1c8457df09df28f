#pragma once

#include "impcol/graph.hpp"
#include "impcol/rational.hpp"

#include <deque>
#include <limits>

namespace impcol {

namespace detail {

// Dinic on integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : adj_(nodes), level_(nodes), iter_(nodes) {}

    void add_arc(int from, int to, std::int64_t cap)
    {
        adj_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap});
        adj_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});
    }

    std::int64_t run(int s, int t)
    {
        std::int64_t flow = 0;
        while (bfs(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (std::int64_t pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max()))
                flow += pushed;
        }
        return flow;
    }

    /// After run(): nodes reachable from s in the residual network.
    std::vector<bool> source_side(int s) const
    {
        std::vector<bool> seen(adj_.size(), false);
        std::deque<int> q{s};
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int a : adj_[v])
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = true;
                    q.push_back(arcs_[a].to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        std::int64_t cap;
    };

    bool bfs(int s, int t)
    {
        std::fill(level_.begin(), level_.end(), -1);
        std::deque<int> q{s};
        level_[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int a : adj_[v])
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[v] + 1;
                    q.push_back(arcs_[a].to);
                }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(int v, int t, std::int64_t limit)
    {
        if (v == t)
            return limit;
        for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
            Arc& arc = arcs_[adj_[v][i]];
            if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1)
                continue;
            std::int64_t got = dfs(arc.to, t, std::min(limit, arc.cap));
            if (got > 0) {
                arc.cap -= got;
                arcs_[adj_[v][i] ^ 1].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

} // namespace detail

/// Maximum average degree: max over non-empty subgraphs H of 2|E(H)|/|V(H)|, exact.
/// Densest subgraph by Dinkelbach iteration; each step is a max-closure min cut
/// (edge nodes weighted q, vertex nodes weighted -p for the current density p/q).
inline Rational mad(const Graph& g)
{
    if (g.empty())
        throw ArgumentError("mad of the empty graph is undefined");
    const auto verts = g.vertices();
    const auto edges = g.edges();
    if (edges.empty())
        return Rational(0);

    std::map<VertexId, int> index;
    for (std::size_t i = 0; i < verts.size(); ++i)
        index[verts[i]] = static_cast<int>(i);

    Rational density(static_cast<std::int64_t>(edges.size()), static_cast<std::int64_t>(verts.size()));

    const int m = static_cast<int>(edges.size());
    const int n = static_cast<int>(verts.size());
    const int source = m + n;
    const int sink = source + 1;
    for (;;) {
        const std::int64_t p = density.numerator();
        const std::int64_t q = density.denominator();
        const std::int64_t inf = q * m + 1;
        detail::MaxFlow net(n + m + 2);
        for (int e = 0; e < m; ++e) {
            net.add_arc(source, e, q);
            net.add_arc(e, m + index[edges[e].first], inf);
            net.add_arc(e, m + index[edges[e].second], inf);
        }
        for (int v = 0; v < n; ++v)
            net.add_arc(m + v, sink, p);
        const std::int64_t cut = net.run(source, sink);
        if (q * m - cut <= 0)
            break;
        const auto side = net.source_side(source);
        std::set<VertexId> chosen;
        for (int v = 0; v < n; ++v)
            if (side[m + v])
                chosen.insert(verts[v]);
        const Graph h = g.induced(chosen);
        Rational next(static_cast<std::int64_t>(h.num_edges()), static_cast<std::int64_t>(h.num_vertices()));
        if (next <= density)
            break;
        density = next;
    }
    return 2 * density;
}

} // namespace impcol
