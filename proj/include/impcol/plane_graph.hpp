#pragma once

#include "impcol/graph.hpp"

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace impcol {

using Rotation = std::map<VertexId, std::vector<VertexId>>;

struct Dart {
    VertexId tail;
    VertexId head;
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Graph together with a clockwise cyclic order of neighbors at each vertex.
class PlaneGraph {
public:
    PlaneGraph() = default;

    PlaneGraph(Graph g, Rotation rotation) : graph_(std::move(g)), rotation_(std::move(rotation))
    {
        for (VertexId v : graph_.vertices()) {
            auto it = rotation_.find(v);
            if (it == rotation_.end()) {
                if (graph_.degree(v) != 0)
                    throw InvalidEmbedding("vertex " + std::to_string(v) + " has no rotation");
                rotation_[v] = {};
                continue;
            }
            const auto& rot = it->second;
            std::set<VertexId> listed(rot.begin(), rot.end());
            if (listed.size() != rot.size() || listed != graph_.neighbors(v))
                throw InvalidEmbedding("rotation at " + std::to_string(v)
                                       + " is not a permutation of its neighbors");
        }
        for (const auto& [v, _] : rotation_)
            if (!graph_.has_vertex(v))
                throw InvalidEmbedding("rotation given for unknown vertex " + std::to_string(v));
        for (const auto& [v, rot] : rotation_)
            for (std::size_t i = 0; i < rot.size(); ++i)
                position_[{v, rot[i]}] = static_cast<int>(i);
    }

    const Graph& graph() const { return graph_; }
    const Rotation& rotation() const { return rotation_; }
    const std::vector<VertexId>& rotation(VertexId v) const { return rotation_.at(v); }

    /// Face-successor rule: (u,v) -> (v,w) where w immediately precedes u in rotation(v).
    Dart next_dart(Dart d) const
    {
        const auto& rot = rotation_.at(d.head);
        int i = position_.at({d.head, d.tail});
        int n = static_cast<int>(rot.size());
        return {d.head, rot[(i + n - 1) % n]};
    }

private:
    Graph graph_;
    Rotation rotation_;
    std::map<std::pair<VertexId, VertexId>, int> position_;
};

/// One position on a face boundary walk: `vertex` entered from `prev`, left towards `next`.
struct Corner {
    VertexId prev;
    VertexId vertex;
    VertexId next;
};

/// A face: one or more closed dart walks (several only for merged outer faces of
/// disconnected inputs) plus isolated vertices lying inside it.
/// The degree is the number of boundary darts, so an edge with this face on both
/// sides counts twice.
struct Face {
    std::vector<std::vector<Dart>> walks;
    std::vector<VertexId> isolated;

    int degree() const
    {
        std::size_t d = 0;
        for (const auto& w : walks)
            d += w.size();
        return static_cast<int>(d);
    }

    std::vector<Corner> corners() const
    {
        std::vector<Corner> out;
        for (const auto& w : walks) {
            const std::size_t n = w.size();
            for (std::size_t i = 0; i < n; ++i)
                out.push_back({w[(i + n - 1) % n].tail, w[i].tail, w[i].head});
        }
        return out;
    }

    /// Boundary vertices with multiplicity, in walk order; isolated vertices last.
    std::vector<VertexId> boundary() const
    {
        std::vector<VertexId> out;
        for (const auto& w : walks)
            for (const Dart& d : w)
                out.push_back(d.tail);
        out.insert(out.end(), isolated.begin(), isolated.end());
        return out;
    }

    bool single_walk() const { return walks.size() == 1 && isolated.empty(); }
};

struct FaceSet {
    std::vector<Face> faces;
    std::map<Dart, int> face_of_dart;
    std::map<VertexId, int> face_of_isolated;

    int face_of(VertexId u, VertexId v) const { return face_of_dart.at({u, v}); }

    /// Indices of the faces around v, one per corner, in rotation order.
    std::vector<int> faces_at(const PlaneGraph& pg, VertexId v) const
    {
        std::vector<int> out;
        if (pg.graph().degree(v) == 0) {
            out.push_back(face_of_isolated.at(v));
            return out;
        }
        for (VertexId w : pg.rotation(v))
            out.push_back(face_of(v, w));
        return out;
    }
};

/// Dart orbits, traced from the lowest unvisited dart (ascending tail, then head).
/// An isolated vertex yields its own face of degree 0.
inline FaceSet trace_faces(const PlaneGraph& pg)
{
    FaceSet fs;
    const Graph& g = pg.graph();
    for (VertexId v : g.vertices()) {
        if (g.degree(v) == 0) {
            fs.face_of_isolated[v] = static_cast<int>(fs.faces.size());
            fs.faces.push_back(Face{{}, {v}});
            continue;
        }
        for (VertexId w : g.neighbors(v)) {
            Dart start{v, w};
            if (fs.face_of_dart.count(start))
                continue;
            const int idx = static_cast<int>(fs.faces.size());
            std::vector<Dart> walk;
            Dart d = start;
            do {
                fs.face_of_dart[d] = idx;
                walk.push_back(d);
                d = pg.next_dart(d);
            } while (d != start);
            fs.faces.push_back(Face{{std::move(walk)}, {}});
        }
    }
    return fs;
}

inline std::vector<Face> faces(const PlaneGraph& pg) { return trace_faces(pg).faces; }

/// Faces of the drawing in the plane. Identical to the dart orbits for connected
/// inputs. For disconnected inputs the first orbit of every component is treated as
/// that component's outer face and all of them are merged into a single face.
inline FaceSet plane_faces(const PlaneGraph& pg)
{
    FaceSet orbits = trace_faces(pg);
    const auto comps = connected_components(pg.graph());
    if (comps.size() <= 1)
        return orbits;

    std::map<VertexId, int> comp_of;
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c])
            comp_of[v] = static_cast<int>(c);

    auto first_vertex = [](const Face& f) {
        return f.walks.empty() ? f.isolated.front() : f.walks.front().front().tail;
    };

    std::vector<int> outer_of_comp(comps.size(), -1);
    for (std::size_t i = 0; i < orbits.faces.size(); ++i) {
        int c = comp_of.at(first_vertex(orbits.faces[i]));
        if (outer_of_comp[c] < 0)
            outer_of_comp[c] = static_cast<int>(i);
    }
    std::set<int> outer(outer_of_comp.begin(), outer_of_comp.end());
    const int merged_at = *outer.begin();

    FaceSet out;
    std::vector<int> remap(orbits.faces.size(), -1);
    for (std::size_t i = 0; i < orbits.faces.size(); ++i) {
        const int ii = static_cast<int>(i);
        if (outer.count(ii) && ii != merged_at)
            continue;
        remap[i] = static_cast<int>(out.faces.size());
        out.faces.push_back(orbits.faces[i]);
    }
    Face& merged = out.faces[remap[merged_at]];
    for (int i : outer) {
        if (i == merged_at)
            continue;
        remap[i] = remap[merged_at];
        const Face& f = orbits.faces[i];
        merged.walks.insert(merged.walks.end(), f.walks.begin(), f.walks.end());
        merged.isolated.insert(merged.isolated.end(), f.isolated.begin(), f.isolated.end());
    }
    for (const auto& [d, i] : orbits.face_of_dart)
        out.face_of_dart[d] = remap[i];
    for (const auto& [v, i] : orbits.face_of_isolated)
        out.face_of_isolated[v] = remap[i];
    return out;
}

struct EulerReport {
    bool connected = true;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t f = 0; // dart orbits summed over components
    bool is_plane = true;
};

/// Checks n_c - m_c + f_c = 2 for every connected component c.
inline EulerReport euler_check(const PlaneGraph& pg)
{
    const Graph& g = pg.graph();
    const FaceSet fs = trace_faces(pg);
    const auto comps = connected_components(g);

    EulerReport r;
    r.connected = comps.size() <= 1;
    r.n = g.num_vertices();
    r.m = g.num_edges();
    r.f = fs.faces.size();

    std::map<VertexId, int> comp_of;
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c])
            comp_of[v] = static_cast<int>(c);
    std::vector<long> n_c(comps.size()), m_c(comps.size()), f_c(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c)
        n_c[c] = static_cast<long>(comps[c].size());
    for (auto [u, v] : g.edges())
        ++m_c[comp_of[u]];
    for (const Face& face : fs.faces) {
        VertexId v = face.walks.empty() ? face.isolated.front() : face.walks.front().front().tail;
        ++f_c[comp_of[v]];
    }
    for (std::size_t c = 0; c < comps.size(); ++c)
        if (n_c[c] - m_c[c] + f_c[c] != 2)
            r.is_plane = false;
    return r;
}

} // namespace impcol
