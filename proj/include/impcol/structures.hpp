#pragma once

#include "impcol/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>
#include <vector>

namespace impcol {

inline constexpr int kBigDegree = 8;

inline bool is_big(const Graph& g, VertexId v) { return g.degree(v) >= kBigDegree; }

/// A local pattern whose presence lets a coloring of a smaller graph be extended.
struct ReducibleConfig {
    enum class Kind {
        Disconnected,
        OneVertex,
        NoBigNeighbor,
        FewBigNeighbors,
        ThreeAdjacentToTwo,
        DegreeSlackLow,
        ComponentSlack,
    };
    Kind kind;
    std::vector<VertexId> witness;

    friend bool operator==(const ReducibleConfig&, const ReducibleConfig&) = default;
};

inline const char* kind_name(ReducibleConfig::Kind k)
{
    using K = ReducibleConfig::Kind;
    switch (k) {
    case K::Disconnected: return "Disconnected";
    case K::OneVertex: return "OneVertex";
    case K::NoBigNeighbor: return "NoBigNeighbor";
    case K::FewBigNeighbors: return "FewBigNeighbors";
    case K::ThreeAdjacentToTwo: return "ThreeAdjacentToTwo";
    case K::DegreeSlackLow: return "DegreeSlackLow";
    case K::ComponentSlack: return "ComponentSlack";
    }
    return "?";
}

/// Some hypergraph component has no vertex with d - dhat >= 8, so no root exists.
class SponsorshipUndefined : public Error {
public:
    explicit SponsorshipUndefined(std::vector<ReducibleConfig> witnesses)
        : Error("sponsorship undefined: " + std::to_string(witnesses.size())
                + " hypergraph component(s) without a vertex of slack >= 8"),
          witnesses_(std::move(witnesses))
    {
    }
    const std::vector<ReducibleConfig>& witnesses() const { return witnesses_; }

private:
    std::vector<ReducibleConfig> witnesses_;
};

/// Special face: a 5-face u v1 y0 x0 v0 with u, x0, y0 of degree 2 and non-adjacent
/// big vertices v0 < v1; u lies between them, x0 next to v0, y0 next to v1.
///
/// Special configuration: a 3-vertex u whose three neighbors v0 < v1 < v2 are big and
/// whose three incident faces are 5-faces u v_i x_i y_i v_{i+1} with the x_i, y_i of
/// degree 2 (indices mod 3; x_i next to v_i, y_i next to v_{i+1}).
struct SpecialStructure {
    enum class Kind { SpecialFace, SpecialConfiguration };
    Kind kind;
    VertexId u;
    std::vector<VertexId> v;
    std::vector<VertexId> x;
    std::vector<VertexId> y;
    std::vector<int> faces; // plane face indices; faces[i] holds v_i and v_{i+1}

    std::vector<VertexId> small_vertices() const
    {
        std::vector<VertexId> out{u};
        out.insert(out.end(), x.begin(), x.end());
        out.insert(out.end(), y.begin(), y.end());
        return out;
    }

    friend bool operator==(const SpecialStructure&, const SpecialStructure&) = default;
};

namespace detail {

inline std::vector<VertexId> simple_five_cycle(const Face& f)
{
    if (!f.single_walk() || f.degree() != 5)
        return {};
    std::vector<VertexId> cyc;
    for (const Dart& d : f.walks.front())
        cyc.push_back(d.tail);
    std::set<VertexId> distinct(cyc.begin(), cyc.end());
    return distinct.size() == 5 ? cyc : std::vector<VertexId>{};
}

} // namespace detail

/// Every special face and special configuration, each once. Special faces come first
/// (ascending face index), then configurations (ascending u).
inline std::vector<SpecialStructure> find_special_structures(const PlaneGraph& pg, const FaceSet& fs)
{
    const Graph& g = pg.graph();
    std::vector<SpecialStructure> out;

    for (std::size_t fi = 0; fi < fs.faces.size(); ++fi) {
        const auto cyc = detail::simple_five_cycle(fs.faces[fi]);
        if (cyc.empty())
            continue;
        std::vector<int> big_pos, two_pos;
        for (int i = 0; i < 5; ++i) {
            if (is_big(g, cyc[i]))
                big_pos.push_back(i);
            else if (g.degree(cyc[i]) == 2)
                two_pos.push_back(i);
        }
        if (big_pos.size() != 2 || two_pos.size() != 3)
            continue;
        const VertexId a = cyc[big_pos[0]];
        const VertexId b = cyc[big_pos[1]];
        if (g.has_edge(a, b))
            continue;
        // Non-adjacent on a 5-cycle: exactly one vertex lies between them on one side.
        const int gap = big_pos[1] - big_pos[0];
        const int mid = gap == 2 ? big_pos[0] + 1 : (big_pos[1] + 1) % 5;
        SpecialStructure s;
        s.kind = SpecialStructure::Kind::SpecialFace;
        s.u = cyc[mid];
        s.v = {std::min(a, b), std::max(a, b)};
        auto other_side = [&](VertexId big) {
            const int p = static_cast<int>(std::find(cyc.begin(), cyc.end(), big) - cyc.begin());
            const VertexId l = cyc[(p + 4) % 5];
            const VertexId r = cyc[(p + 1) % 5];
            return l == s.u ? r : l;
        };
        s.x = {other_side(s.v[0])};
        s.y = {other_side(s.v[1])};
        s.faces = {static_cast<int>(fi)};
        out.push_back(std::move(s));
    }

    for (VertexId u : g.vertices()) {
        if (g.degree(u) != 3)
            continue;
        std::vector<VertexId> vs(g.neighbors(u).begin(), g.neighbors(u).end());
        if (!std::all_of(vs.begin(), vs.end(), [&](VertexId w) { return is_big(g, w); }))
            continue;
        SpecialStructure s;
        s.kind = SpecialStructure::Kind::SpecialConfiguration;
        s.u = u;
        s.v = vs; // ascending already
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            const VertexId vi = vs[i];
            const VertexId vj = vs[(i + 1) % 3];
            // The face at u's corner between vi and vj.
            int fi = -1;
            for (VertexId w : {vi, vj}) {
                const int f = fs.face_of(u, w);
                for (const Corner& c : fs.faces[f].corners())
                    if (c.vertex == u && ((c.prev == vi && c.next == vj) || (c.prev == vj && c.next == vi)))
                        fi = f;
            }
            if (fi < 0) {
                ok = false;
                break;
            }
            const auto cyc = detail::simple_five_cycle(fs.faces[fi]);
            if (cyc.empty()) {
                ok = false;
                break;
            }
            const int pu = static_cast<int>(std::find(cyc.begin(), cyc.end(), u) - cyc.begin());
            // Walk away from u through vi: u, vi, xi, yi, vj (in one of the two directions).
            const int dir = cyc[(pu + 1) % 5] == vi ? 1 : 4;
            const VertexId xi = cyc[(pu + 2 * dir) % 5];
            const VertexId yi = cyc[(pu + 3 * dir) % 5];
            if (cyc[(pu + 4 * dir) % 5] != vj || g.degree(xi) != 2 || g.degree(yi) != 2) {
                ok = false;
                break;
            }
            s.x.push_back(xi);
            s.y.push_back(yi);
            s.faces.push_back(fi);
        }
        if (!ok)
            continue;
        std::set<int> distinct_faces(s.faces.begin(), s.faces.end());
        std::set<VertexId> members{u};
        members.insert(s.v.begin(), s.v.end());
        members.insert(s.x.begin(), s.x.end());
        members.insert(s.y.begin(), s.y.end());
        if (distinct_faces.size() != 3 || members.size() != 10)
            continue;
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<SpecialStructure> find_special_structures(const PlaneGraph& pg)
{
    return find_special_structures(pg, plane_faces(pg));
}

/// Hypergraph on the big vertices, one hyperedge per special structure.
struct StructureHypergraph {
    std::vector<VertexId> vertices;        // big vertices, ascending
    std::map<VertexId, int> degree;        // degree in the host graph
    std::vector<std::vector<VertexId>> hyperedges; // index i <-> structure i
    std::map<VertexId, int> dhat;

    // Filled by choose_roots_and_sponsor.
    std::vector<VertexId> roots;
    std::vector<VertexId> sponsor;         // per hyperedge
    std::map<VertexId, int> reached_by;    // non-root -> hyperedge that first reached it

    int slack(VertexId v) const { return degree.at(v) - dhat.at(v); }
    bool oriented = false;

    /// Components as ascending vertex lists, ordered by their lowest vertex.
    std::vector<std::vector<VertexId>> components() const
    {
        std::map<VertexId, VertexId> parent;
        for (VertexId v : vertices)
            parent[v] = v;
        std::function<VertexId(VertexId)> find = [&](VertexId v) {
            return parent[v] == v ? v : parent[v] = find(parent[v]);
        };
        for (const auto& e : hyperedges)
            for (std::size_t i = 1; i < e.size(); ++i) {
                VertexId a = find(e[0]), b = find(e[i]);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        std::map<VertexId, std::vector<VertexId>> by_root;
        for (VertexId v : vertices)
            by_root[find(v)].push_back(v);
        std::vector<std::vector<VertexId>> out;
        for (auto& [_, comp] : by_root)
            out.push_back(std::move(comp));
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Hyperedges containing v, ascending.
    std::vector<int> incident(VertexId v) const
    {
        std::vector<int> out;
        for (std::size_t i = 0; i < hyperedges.size(); ++i)
            if (std::find(hyperedges[i].begin(), hyperedges[i].end(), v) != hyperedges[i].end())
                out.push_back(static_cast<int>(i));
        return out;
    }

    /// Number of hyperedges v sponsors.
    int sponsored_by(VertexId v) const
    {
        return static_cast<int>(std::count(sponsor.begin(), sponsor.end(), v));
    }
};

inline StructureHypergraph build_hypergraph(const PlaneGraph& pg, const std::vector<SpecialStructure>& structures)
{
    const Graph& g = pg.graph();
    StructureHypergraph h;
    for (VertexId v : g.vertices())
        if (is_big(g, v)) {
            h.vertices.push_back(v);
            h.degree[v] = g.degree(v);
            h.dhat[v] = 0;
        }
    for (const auto& s : structures) {
        h.hyperedges.push_back(s.v);
        for (VertexId v : s.v)
            ++h.dhat[v];
    }
    return h;
}

inline StructureHypergraph build_hypergraph(const PlaneGraph& pg)
{
    return build_hypergraph(pg, find_special_structures(pg));
}

/// Components with no vertex of slack d - dhat >= 8.
inline std::vector<ReducibleConfig> slack_deficient_components(const StructureHypergraph& h)
{
    std::vector<ReducibleConfig> out;
    for (const auto& comp : h.components())
        if (std::none_of(comp.begin(), comp.end(), [&](VertexId v) { return h.slack(v) >= 8; }))
            out.push_back({ReducibleConfig::Kind::ComponentSlack, comp});
    return out;
}

/// Root of each component = lowest vertex with d - dhat >= 8. Breadth-first from the
/// root: a vertex, once dequeued, sponsors every incident hyperedge not yet
/// sponsored, and the members reached through it for the first time are its heads.
inline StructureHypergraph choose_roots_and_sponsor(StructureHypergraph h)
{
    if (auto bad = slack_deficient_components(h); !bad.empty())
        throw SponsorshipUndefined(std::move(bad));
    h.roots.clear();
    h.reached_by.clear();
    h.oriented = true;
    h.sponsor.assign(h.hyperedges.size(), -1);
    std::map<VertexId, std::vector<int>> incident;
    for (std::size_t i = 0; i < h.hyperedges.size(); ++i)
        for (VertexId v : h.hyperedges[i])
            incident[v].push_back(static_cast<int>(i));
    for (const auto& comp : h.components()) {
        const VertexId root = *std::find_if(comp.begin(), comp.end(), [&](VertexId v) { return h.slack(v) >= 8; });
        h.roots.push_back(root);
        std::set<VertexId> reached{root};
        std::deque<VertexId> queue{root};
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (int e : incident[v]) {
                if (h.sponsor[e] >= 0)
                    continue;
                h.sponsor[e] = v;
                for (VertexId w : h.hyperedges[e])
                    if (reached.insert(w).second) {
                        h.reached_by[w] = e;
                        queue.push_back(w);
                    }
            }
        }
    }
    return h;
}

} // namespace impcol
