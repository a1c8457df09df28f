#pragma once

#include "impcol/structures.hpp"

namespace impcol {

/// Configurations detectable without an embedding, in kind order, ascending witnesses.
inline std::vector<ReducibleConfig> detect_reducible(const Graph& g)
{
    using K = ReducibleConfig::Kind;
    std::vector<ReducibleConfig> out;

    if (const auto comps = connected_components(g); comps.size() > 1) {
        std::vector<VertexId> reps;
        for (const auto& c : comps)
            reps.push_back(c.front());
        out.push_back({K::Disconnected, reps});
    }
    for (VertexId v : g.vertices())
        if (g.degree(v) == 1)
            out.push_back({K::OneVertex, {v}});
    for (VertexId v : g.vertices()) {
        if (is_big(g, v))
            continue;
        const auto& nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](VertexId w) { return is_big(g, w); }))
            out.push_back({K::NoBigNeighbor, {v}});
    }
    for (VertexId v : g.vertices()) {
        const int d = g.degree(v);
        if (d < 3 || d >= kBigDegree)
            continue;
        std::vector<VertexId> witness{v};
        for (VertexId w : g.neighbors(v))
            if (is_big(g, w))
                witness.push_back(w);
        if (witness.size() <= 2)
            out.push_back({K::FewBigNeighbors, witness});
    }
    for (VertexId w : g.vertices()) {
        if (g.degree(w) != 3)
            continue;
        for (VertexId v : g.neighbors(w))
            if (g.degree(v) == 2)
                out.push_back({K::ThreeAdjacentToTwo, {w, v}});
    }
    return out;
}

/// All configurations, including the hypergraph slack ones that need faces.
inline std::vector<ReducibleConfig> detect_reducible(const PlaneGraph& pg)
{
    auto out = detect_reducible(pg.graph());
    const StructureHypergraph h = build_hypergraph(pg);
    for (VertexId v : h.vertices)
        if (h.slack(v) <= 6)
            out.push_back({ReducibleConfig::Kind::DegreeSlackLow, {v}});
    const auto comp = slack_deficient_components(h);
    out.insert(out.end(), comp.begin(), comp.end());
    return out;
}

} // namespace impcol
