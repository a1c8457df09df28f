#pragma once

#include "impcol/cycles.hpp"
#include "impcol/plane_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace impcol {

/// Every edge replaced by a path with `times` internal vertices, keeping the embedding.
/// New ids follow the existing ones, edge by edge in ascending order.
inline PlaneGraph subdivide_plane(const PlaneGraph& pg, int times)
{
    const Graph& g = pg.graph();
    Rotation rot = pg.rotation();
    Graph h;
    for (VertexId v : g.vertices())
        h.add_vertex(v);
    VertexId next = g.next_free_id();
    for (auto [u, v] : g.edges()) {
        std::vector<VertexId> chain{u};
        for (int i = 0; i < times; ++i)
            chain.push_back(next++);
        chain.push_back(v);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            h.add_edge(chain[i], chain[i + 1]);
        std::replace(rot[u].begin(), rot[u].end(), v, chain[1]);
        std::replace(rot[v].begin(), rot[v].end(), u, chain[chain.size() - 2]);
        for (std::size_t i = 1; i + 1 < chain.size(); ++i)
            rot[chain[i]] = {chain[i - 1], chain[i + 1]};
    }
    return PlaneGraph(std::move(h), std::move(rot));
}

/// Random connected simple plane graph on vertices 0..n-1: a random tree (half of the
/// attachments go to one of three hubs, so high degrees occur) followed by up to
/// `extra_edges` chords, each drawn inside a randomly chosen face.
inline PlaneGraph random_plane_graph(std::uint64_t seed, int n, int extra_edges)
{
    if (n < 1)
        throw ArgumentError("random_plane_graph needs at least one vertex");
    std::mt19937_64 rng(seed);
    auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    Graph g;
    Rotation rot;
    g.add_vertex(0);
    rot[0] = {};
    for (int i = 1; i < n; ++i) {
        int parent = pick(0, 1) ? pick(0, std::min(2, i - 1)) : pick(0, i - 1);
        g.add_edge(parent, i);
        auto& r = rot[parent];
        r.insert(r.begin() + pick(0, static_cast<int>(r.size())), i);
        rot[i] = {parent};
    }

    int added = 0;
    for (int attempt = 0; added < extra_edges && attempt < 20 * (extra_edges + 1); ++attempt) {
        PlaneGraph pg(g, rot);
        const FaceSet fs = trace_faces(pg);
        const Face& face = fs.faces[pick(0, static_cast<int>(fs.faces.size()) - 1)];
        const auto corners = face.corners();
        if (corners.size() < 4)
            continue;
        const Corner a = corners[pick(0, static_cast<int>(corners.size()) - 1)];
        const Corner b = corners[pick(0, static_cast<int>(corners.size()) - 1)];
        if (a.vertex == b.vertex || g.has_edge(a.vertex, b.vertex))
            continue;
        // Insert the chord just before the incoming neighbor at each corner, which keeps
        // both new darts inside `face`.
        auto& ra = rot[a.vertex];
        ra.insert(std::find(ra.begin(), ra.end(), a.prev), b.vertex);
        auto& rb = rot[b.vertex];
        rb.insert(std::find(rb.begin(), rb.end(), b.prev), a.vertex);
        g.add_edge(a.vertex, b.vertex);
        ++added;
    }
    return PlaneGraph(std::move(g), std::move(rot));
}

/// Class-C graph from any plane base: subdividing every edge twice turns every cycle
/// length into a multiple of 3 that is at least 9.
inline PlaneGraph class_C_from_base(const PlaneGraph& base) { return subdivide_plane(base, 2); }

/// Deterministic class-C test graph with at most max(1, target_size) vertices.
inline PlaneGraph generate_class_C(std::uint64_t seed, int target_size)
{
    if (target_size < 1)
        throw ArgumentError("target_size must be at least 1");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    // A tree base on n0 vertices yields 3*n0 - 2 vertices; each chord adds 2 more.
    const int n_max = std::max(1, (target_size + 2) / 3);
    const int n0 = pick((n_max + 1) / 2, n_max);
    const int spare = std::max(0, (target_size - (3 * n0 - 2)) / 2);
    const int planar_room = n0 >= 3 ? 3 * n0 - 6 - (n0 - 1) : 0;
    const int extra = pick(0, std::min(spare, planar_room));
    return class_C_from_base(random_plane_graph(rng(), n0, extra));
}

} // namespace impcol
