#pragma once

#include "impcol/io.hpp"
#include "impcol/solver.hpp"

#include <optional>

namespace impcol {

/// A graph with named terminals and the forcing property it claims.
struct TerminalGadget {
    enum class Contract { None, U3Forcing, PairForcing };

    Graph graph;
    std::optional<Rotation> rotation;
    std::map<std::string, VertexId> terminals;
    Contract contract = Contract::None;

    VertexId terminal(const std::string& role) const
    {
        auto it = terminals.find(role);
        if (it == terminals.end())
            throw ArgumentError("gadget has no terminal '" + role + "'");
        return it->second;
    }

    void validate() const
    {
        for (const auto& [role, v] : terminals)
            if (!graph.has_vertex(v))
                throw ArgumentError("terminal " + role + " is not a vertex of the gadget");
        if (terminals.count("x") && terminals.count("y") && terminal("x") == terminal("y"))
            throw ArgumentError("pair terminals x and y must be distinct");
        if (rotation)
            PlaneGraph(graph, *rotation);
    }

    static TerminalGadget from_file(const GraphFile& gf)
    {
        TerminalGadget t;
        t.graph = gf.graph;
        t.rotation = gf.rotation;
        t.terminals = gf.terminals;
        if (t.terminals.count("x") && t.terminals.count("y"))
            t.contract = Contract::PairForcing;
        else if (t.terminals.count("u3"))
            t.contract = Contract::U3Forcing;
        t.validate();
        return t;
    }

    GraphFile to_file(std::string name = "gadget") const
    {
        GraphFile gf;
        gf.name = std::move(name);
        gf.graph = graph;
        gf.rotation = rotation;
        gf.terminals = terminals;
        return gf;
    }
};

struct ForcingVerdict {
    bool colorable = false;
    bool forcing = false;
};

namespace detail {

inline TerminalGadget path_gadget(const Graph& h, VertexId v, const Rotation* rot)
{
    if (!h.has_vertex(v) || h.degree(v) != 2)
        throw ArgumentError("path gadget needs a 2-vertex");
    const VertexId u1 = *h.neighbors(v).begin();
    const VertexId u5 = *h.neighbors(v).rbegin();
    TerminalGadget t;
    t.graph = h;
    t.graph.remove_vertex(v);
    const VertexId u2 = h.next_free_id(), u3 = u2 + 1, u4 = u2 + 2;
    t.graph.add_edge(u1, u2);
    t.graph.add_edge(u2, u3);
    t.graph.add_edge(u3, u4);
    t.graph.add_edge(u4, u5);
    if (rot) {
        Rotation r = *rot;
        r.erase(v);
        std::replace(r[u1].begin(), r[u1].end(), v, u2);
        std::replace(r[u5].begin(), r[u5].end(), v, u4);
        r[u2] = {u1, u3};
        r[u3] = {u2, u4};
        r[u4] = {u3, u5};
        t.rotation = std::move(r);
    }
    t.terminals = {{"u1", u1}, {"u3", u3}, {"u5", u5}};
    t.contract = TerminalGadget::Contract::U3Forcing;
    return t;
}

} // namespace detail

/// Replaces the 2-vertex v (neighbors u1 < u5) by the path u1 u2 u3 u4 u5 with fresh
/// u2, u3, u4; u3 is the terminal.
inline TerminalGadget build_path_gadget(const Graph& h, VertexId v) { return detail::path_gadget(h, v, nullptr); }

inline TerminalGadget build_path_gadget(const PlaneGraph& h, VertexId v)
{
    return detail::path_gadget(h.graph(), v, &h.rotation());
}

enum class ForcingMethod { Enumerate, Solver };

/// u3-forcing: the gadget is (0,k)-colorable and in every (0,k)-coloring u3 is K with
/// exactly one K-neighbor.
///
/// Enumerate visits every coloring (refused above `threshold` vertices). Solver
/// instead asks complement queries, each of which must be unsatisfiable: u3 Zero;
/// u3 K with all neighbors Zero; u3 K with some pair of neighbors K.
inline ForcingVerdict verify_u3_forcing(const TerminalGadget& t, int k, ForcingMethod method = ForcingMethod::Enumerate,
                                        std::size_t threshold = kEnumerationThreshold, const SolverOptions& opts = {})
{
    const VertexId u3 = t.terminal("u3");
    const Graph& g = t.graph;
    ForcingVerdict out;
    if (method == ForcingMethod::Enumerate) {
        if (g.num_vertices() > threshold)
            throw ResourceLimit("u3-forcing enumeration limited to " + std::to_string(threshold) + " vertices");
        bool forcing = true;
        for_each_coloring(
            g, zero_k(k),
            [&](const Coloring& c) {
                out.colorable = true;
                int k_nbrs = 0;
                for (VertexId w : g.neighbors(u3))
                    k_nbrs += c.at(w) == Color::K;
                forcing = c.at(u3) == Color::K && k_nbrs == 1;
                return forcing;
            },
            opts);
        out.forcing = out.colorable && forcing;
        return out;
    }

    out.colorable = is_colorable(g, zero_k(k), opts);
    if (!out.colorable)
        return out;
    auto unsat = [&](const Coloring& pre) { return !is_colorable(g, zero_k(k, pre), opts); };
    if (!unsat({{u3, Color::Zero}}))
        return out;
    Coloring isolated{{u3, Color::K}};
    for (VertexId w : g.neighbors(u3))
        isolated[w] = Color::Zero;
    if (!unsat(isolated))
        return out;
    const std::vector<VertexId> nb(g.neighbors(u3).begin(), g.neighbors(u3).end());
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!unsat({{u3, Color::K}, {nb[i], Color::K}, {nb[j], Color::K}}))
                return out;
    out.forcing = true;
    return out;
}

inline constexpr std::size_t kForcingPairThreshold = 2000;

/// Pair forcing: no (0,k)-coloring gives every neighbor of x and of y the color Zero.
/// A single unsatisfiability query, so it scales to large candidates.
inline ForcingVerdict verify_forcing_pair(const TerminalGadget& t, int k,
                                          std::size_t threshold = kForcingPairThreshold,
                                          const SolverOptions& opts = {})
{
    if (t.graph.num_vertices() > threshold)
        throw ResourceLimit("forcing-pair check limited to " + std::to_string(threshold) + " vertices");
    const VertexId x = t.terminal("x");
    const VertexId y = t.terminal("y");
    ForcingVerdict out;
    out.colorable = is_colorable(t.graph, zero_k(k), opts);
    Coloring pre;
    for (VertexId w : t.graph.neighbors(x))
        pre[w] = Color::Zero;
    for (VertexId w : t.graph.neighbors(y))
        pre[w] = Color::Zero;
    out.forcing = !is_colorable(t.graph, zero_k(k, pre), opts);
    return out;
}

namespace detail {

/// Copies the gadget with its vertices renamed by `rename`; returns the images of
/// the edges.
inline std::vector<std::pair<VertexId, VertexId>> copy_edges(const Graph& gadget, const std::map<VertexId, VertexId>& rename)
{
    std::vector<std::pair<VertexId, VertexId>> out;
    for (auto [a, b] : gadget.edges())
        out.emplace_back(rename.at(a), rename.at(b));
    return out;
}

} // namespace detail

/// For every vertex v of g, attaches k-1 fresh copies of the gadget through an edge
/// from v to the copy's u3. The copies use consecutive id blocks after g's ids,
/// vertex by vertex.
inline Graph reduce_01_to_0k(const Graph& g, const TerminalGadget& gadget, int k)
{
    if (k < 1)
        throw ArgumentError("reduction needs k >= 1");
    const VertexId u3 = gadget.terminal("u3");
    const auto gverts = gadget.graph.vertices();
    Graph out = g;
    VertexId next = g.next_free_id();
    for (VertexId v : g.vertices())
        for (int copy = 0; copy + 1 < k; ++copy) {
            std::map<VertexId, VertexId> rename;
            for (VertexId w : gverts)
                rename[w] = next++;
            for (VertexId w : gverts)
                out.add_vertex(rename[w]);
            for (auto [a, b] : detail::copy_edges(gadget.graph, rename))
                out.add_edge(a, b);
            out.add_edge(v, rename[u3]);
        }
    return out;
}

/// Plane version: each attachment edge is a bridge, appended to both rotations.
inline PlaneGraph reduce_01_to_0k(const PlaneGraph& g, const TerminalGadget& gadget, int k)
{
    if (!gadget.rotation)
        throw ArgumentError("plane reduction needs an embedded gadget");
    const Graph plain = reduce_01_to_0k(g.graph(), gadget, k);
    Rotation rot = g.rotation();
    const VertexId u3 = gadget.terminal("u3");
    const auto gverts = gadget.graph.vertices();
    VertexId next = g.graph().next_free_id();
    for (VertexId v : g.graph().vertices())
        for (int copy = 0; copy + 1 < k; ++copy) {
            std::map<VertexId, VertexId> rename;
            for (VertexId w : gverts)
                rename[w] = next++;
            for (const auto& [w, order] : *gadget.rotation) {
                auto& r = rot[rename[w]];
                for (VertexId x : order)
                    r.push_back(rename[x]);
            }
            rot[v].push_back(rename[u3]);
            rot[rename[u3]].push_back(v);
        }
    return PlaneGraph(plain, std::move(rot));
}

/// Template whose marked connections are to be replaced by gadget copies. The same
/// pair may be marked several times (one copy each).
struct GadgetTemplate {
    Graph graph; // includes one edge per marked pair
    std::vector<std::pair<VertexId, VertexId>> marked;
    std::optional<Rotation> rotation;

    static GadgetTemplate from_file(const GraphFile& gf) { return {gf.graph, gf.marked, gf.rotation}; }
};

struct Composition {
    Graph graph;
    std::optional<Rotation> rotation; // present when both inputs are embedded
};

/// Replaces every marked connection u < v by a fresh copy of the gadget with x
/// identified to u and y to v. Unmarked edges are kept. Internal gadget vertices get
/// consecutive id blocks after the template ids, connection by connection in
/// ascending (u, v) order.
///
/// With rotations on both sides, each copy is spliced into the embedding through a
/// gadget face that holds both x and y: at u, the entry for v is replaced by x's
/// neighbors in clockwise order starting right after that face's corner (same at v).
inline Composition compose_parallel(const GadgetTemplate& tmpl, const TerminalGadget& gadget)
{
    const VertexId x = gadget.terminal("x");
    const VertexId y = gadget.terminal("y");
    if (gadget.graph.has_edge(x, y))
        throw ArgumentError("gadget terminals x and y are adjacent");
    for (auto [u, v] : tmpl.marked)
        if (!tmpl.graph.has_edge(u, v))
            throw ArgumentError("marked connection " + std::to_string(u) + "-" + std::to_string(v)
                                + " is not a template edge");

    auto marked = tmpl.marked;
    for (auto& [u, v] : marked)
        if (u > v)
            std::swap(u, v);
    std::stable_sort(marked.begin(), marked.end());

    const bool embed = tmpl.rotation && gadget.rotation;
    if (embed) {
        std::set<std::pair<VertexId, VertexId>> seen;
        for (const auto& e : marked)
            if (!seen.insert(e).second)
                throw ArgumentError("embedded composition needs each marked pair at most once");
    }

    Composition out;
    out.graph = tmpl.graph;
    for (const auto& e : std::set<std::pair<VertexId, VertexId>>(marked.begin(), marked.end()))
        out.graph.remove_edge(e.first, e.second);

    // Corner data for the splice.
    std::vector<VertexId> x_seq, y_seq;
    if (embed) {
        const PlaneGraph gp(gadget.graph, *gadget.rotation);
        const FaceSet fs = trace_faces(gp);
        bool found = false;
        for (const Face& f : fs.faces) {
            std::optional<Corner> cx, cy;
            for (const Corner& c : f.corners()) {
                if (c.vertex == x && !cx)
                    cx = c;
                if (c.vertex == y && !cy)
                    cy = c;
            }
            if (f.walks.empty()) {
                // Isolated terminal (degree 0) sits in this face.
                for (VertexId iso : f.isolated) {
                    if (iso == x)
                        cx = Corner{x, x, x};
                    if (iso == y)
                        cy = Corner{y, y, y};
                }
            }
            if (!cx || !cy)
                continue;
            auto sequence = [&](VertexId t, const Corner& c) {
                std::vector<VertexId> seq;
                const auto& r = gadget.rotation->at(t);
                if (r.empty())
                    return seq;
                const auto start = std::find(r.begin(), r.end(), c.prev) - r.begin();
                for (std::size_t i = 0; i < r.size(); ++i)
                    seq.push_back(r[(start + i) % r.size()]);
                return seq;
            };
            x_seq = sequence(x, *cx);
            y_seq = sequence(y, *cy);
            found = true;
            break;
        }
        if (!found)
            throw ArgumentError("no gadget face contains both x and y");
        out.rotation = *tmpl.rotation;
    }

    VertexId next = tmpl.graph.next_free_id();
    for (auto [u, v] : marked) {
        std::map<VertexId, VertexId> rename;
        for (VertexId w : gadget.graph.vertices()) {
            if (w == x)
                rename[w] = u;
            else if (w == y)
                rename[w] = v;
            else
                rename[w] = next++;
        }
        for (VertexId w : gadget.graph.vertices())
            out.graph.add_vertex(rename[w]);
        for (auto [a, b] : detail::copy_edges(gadget.graph, rename))
            out.graph.add_edge(a, b);
        if (embed) {
            auto& rot = *out.rotation;
            for (const auto& [w, order] : *gadget.rotation) {
                if (w == x || w == y)
                    continue;
                auto& r = rot[rename[w]];
                for (VertexId t : order)
                    r.push_back(rename[t]);
            }
            auto splice = [&](VertexId at, VertexId old, const std::vector<VertexId>& seq) {
                auto& r = rot[at];
                auto pos = std::find(r.begin(), r.end(), old);
                std::vector<VertexId> mapped;
                for (VertexId t : seq)
                    mapped.push_back(rename[t]);
                pos = r.erase(pos);
                r.insert(pos, mapped.begin(), mapped.end());
            };
            splice(u, v, x_seq);
            splice(v, u, y_seq);
        }
    }
    return out;
}

} // namespace impcol
