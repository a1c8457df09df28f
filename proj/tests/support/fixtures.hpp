#pragma once

#include "impcol/impcol.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace fx {

using namespace impcol;

using Point = std::pair<double, double>;

/// Rotation from a straight-line drawing: neighbors in clockwise angular order.
inline PlaneGraph embed(const Graph& g, const std::map<VertexId, Point>& at)
{
    Rotation rot;
    for (VertexId v : g.vertices()) {
        std::vector<std::pair<double, VertexId>> around;
        for (VertexId w : g.neighbors(v)) {
            const double dx = at.at(w).first - at.at(v).first;
            const double dy = at.at(w).second - at.at(v).second;
            around.emplace_back(-std::atan2(dy, dx), w);
        }
        std::sort(around.begin(), around.end());
        for (auto [_, w] : around)
            rot[v].push_back(w);
    }
    return PlaneGraph(g, rot);
}

inline Point polar(double r, double deg, Point c = {0, 0})
{
    const double a = deg * std::numbers::pi / 180.0;
    return {c.first + r * std::cos(a), c.second + r * std::sin(a)};
}

/// Rotation for a cycle 0..n-1 (or any graph whose rotation order does not matter
/// beyond being a permutation); for cycles and paths the result is the plane drawing.
inline PlaneGraph natural(const Graph& g)
{
    Rotation rot;
    for (VertexId v : g.vertices())
        rot[v] = std::vector<VertexId>(g.neighbors(v).begin(), g.neighbors(v).end());
    return PlaneGraph(g, rot);
}

inline PlaneGraph cycle(int n) { return natural(make_cycle(n)); }

/// Adds `count` pendant leaves to v, drawn in a fan around direction `deg`.
inline void add_pendants(Graph& g, std::map<VertexId, Point>& at, VertexId v, int count, double deg,
                         double spread = 15.0)
{
    for (int j = 0; j < count; ++j) {
        const VertexId p = g.next_free_id();
        g.add_edge(v, p);
        at[p] = polar(0.5, deg + (j - (count - 1) / 2.0) * spread, at[v]);
    }
}

/// Fig. 1 left with v0 = 0 and v1 = 1 boosted by `pendants` leaves each; u = 2,
/// x0 = 3 (next to v0), y0 = 4 (next to v1).
inline PlaneGraph special_face(int pendants = 7, bool join_bigs = false)
{
    Graph g;
    std::map<VertexId, Point> at;
    const VertexId v0 = 0, v1 = 1, u = 2, x0 = 3, y0 = 4;
    at[u] = polar(1, 90);
    at[v1] = polar(1, 18);
    at[y0] = polar(1, -54);
    at[x0] = polar(1, -126);
    at[v0] = polar(1, 162);
    for (auto [a, b] : std::vector<std::pair<VertexId, VertexId>>{{u, v1}, {v1, y0}, {y0, x0}, {x0, v0}, {v0, u}})
        g.add_edge(a, b);
    if (join_bigs)
        g.add_edge(v0, v1);
    add_pendants(g, at, v0, pendants, 162);
    add_pendants(g, at, v1, pendants, 18);
    return embed(g, at);
}

/// Fig. 1 right: u = 0 of degree 3, big v_i = 1 + i, x_i = 4 + 2i, y_i = 5 + 2i,
/// each v_i boosted by `pendants` leaves.
inline PlaneGraph special_configuration(int pendants = 5)
{
    Graph g;
    std::map<VertexId, Point> at;
    at[0] = {0, 0};
    for (int i = 0; i < 3; ++i) {
        at[1 + i] = polar(2, 90 + 120 * i);
        at[4 + 2 * i] = polar(2.3, 90 + 120 * i + 40);
        at[5 + 2 * i] = polar(2.3, 90 + 120 * i + 80);
    }
    for (int i = 0; i < 3; ++i) {
        const VertexId vi = 1 + i, vj = 1 + (i + 1) % 3, xi = 4 + 2 * i, yi = 5 + 2 * i;
        g.add_edge(0, vi);
        g.add_edge(vi, xi);
        g.add_edge(xi, yi);
        g.add_edge(yi, vj);
    }
    for (int i = 0; i < 3; ++i)
        add_pendants(g, at, 1 + i, pendants, 90 + 120 * i);
    return embed(g, at);
}

/// Two special faces sharing the big vertex w = 1. a = 0 and b = 2 carry 7 pendants,
/// w carries 5 (so its slack is 7). Face A: u = 3, x = 4 (next to a), y = 5 (next to
/// w). Face B: u = 6, x = 7 (next to w), y = 8 (next to b).
inline PlaneGraph shared_special_faces()
{
    Graph g;
    std::map<VertexId, Point> at;
    const Point ca{-1, 0}, cb{1, 0};
    // Pentagon A: w, u, a, x, y at angles 0, 72, ... around ca.
    const std::vector<VertexId> pa{1, 3, 0, 4, 5};
    const std::vector<VertexId> pb{1, 6, 2, 8, 7};
    for (int i = 0; i < 5; ++i) {
        at[pa[i]] = polar(1, 72 * i, ca);
        at[pb[i]] = polar(1, 180 + 72 * i, cb);
    }
    for (int i = 0; i < 5; ++i) {
        g.add_edge(pa[i], pa[(i + 1) % 5]);
        g.add_edge(pb[i], pb[(i + 1) % 5]);
    }
    add_pendants(g, at, 0, 7, 144);
    add_pendants(g, at, 2, 7, 180 + 144);
    add_pendants(g, at, 1, 3, 90);
    add_pendants(g, at, 1, 2, 270);
    return embed(g, at);
}

/// Dodecahedron as a straight-line drawing (planar, girth 5, 3-regular).
inline PlaneGraph dodecahedron()
{
    Graph g;
    std::map<VertexId, Point> at;
    for (int i = 0; i < 5; ++i) {
        at[i] = polar(3, 72 * i);
        at[15 + i] = polar(1, 72 * i + 36);
    }
    for (int j = 0; j < 10; ++j)
        at[5 + j] = polar(2, 36 * j);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5 + 2 * i);
        g.add_edge(5 + 2 * i + 1, 15 + i);
        g.add_edge(15 + i, 15 + (i + 1) % 5);
    }
    for (int j = 0; j < 10; ++j)
        g.add_edge(5 + j, 5 + (j + 1) % 10);
    return embed(g, at);
}

/// K4 drawn with one vertex in the middle of a triangle.
inline PlaneGraph k4()
{
    const Graph g = make_complete(4);
    return embed(g, {{0, {0, 0}}, {1, polar(1, 90)}, {2, polar(1, 210)}, {3, polar(1, 330)}});
}

inline PlaneGraph star(int leaves)
{
    const Graph g = make_star(leaves);
    std::map<VertexId, Point> at{{0, {0, 0}}};
    for (int i = 1; i <= leaves; ++i)
        at[i] = polar(1, 360.0 * i / leaves);
    return embed(g, at);
}

inline PlaneGraph single_vertex()
{
    Graph g;
    g.add_vertex(0);
    return PlaneGraph(g, {});
}

inline PlaneGraph edge() { return natural(make_path(2)); }

/// A 3-vertex w = 0 with neighbors a = 1, b = 2, c = 3, where the first `bigs` of
/// a, b, c are boosted to degree 8 with leaves.
inline PlaneGraph three_vertex_with_big_neighbors(int bigs)
{
    Graph g;
    std::map<VertexId, Point> at{{0, {0, 0}}};
    for (int i = 0; i < 3; ++i) {
        at[1 + i] = polar(1, 90 + 120 * i);
        g.add_edge(0, 1 + i);
    }
    for (int i = 0; i < bigs; ++i)
        add_pendants(g, at, 1 + i, 7, 90 + 120 * i);
    return embed(g, at);
}

/// Abstract-graph u3-forcing gadgets found by exhaustive search over small graphs.
inline TerminalGadget u3_gadget(int k)
{
    TerminalGadget t;
    std::vector<std::pair<VertexId, VertexId>> edges;
    if (k == 2) {
        edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 3}, {4, 5}};
        t.terminals = {{"u3", 4}};
    } else if (k == 3) {
        edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {3, 4}, {5, 6}};
        t.terminals = {{"u3", 5}};
    } else {
        throw ArgumentError("no fixture gadget for this k");
    }
    for (auto [a, b] : edges)
        t.graph.add_edge(a, b);
    t.contract = TerminalGadget::Contract::U3Forcing;
    return t;
}

/// x - a - b - y: no coloring gives all of N(x) and N(y) the color Zero because a, b
/// are adjacent.
inline TerminalGadget p4_pair_gadget()
{
    TerminalGadget t;
    t.graph = make_path(4);
    t.rotation = natural(t.graph).rotation();
    t.terminals = {{"x", 0}, {"y", 3}};
    t.contract = TerminalGadget::Contract::PairForcing;
    return t;
}

inline TerminalGadget path_pair_gadget()
{
    TerminalGadget t;
    t.graph = make_path(3);
    t.rotation = natural(t.graph).rotation();
    t.terminals = {{"x", 0}, {"y", 2}};
    t.contract = TerminalGadget::Contract::PairForcing;
    return t;
}

inline Graph random_graph(std::uint64_t seed, int n, double p)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g;
    for (int v = 0; v < n; ++v)
        g.add_vertex(v);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng))
                g.add_edge(a, b);
    return g;
}

struct Entry {
    std::string name;
    Graph graph;
    std::optional<PlaneGraph> plane;
};

inline std::vector<Entry> corpus()
{
    std::vector<Entry> out;
    auto add_plane = [&](std::string name, const PlaneGraph& pg) { out.push_back({std::move(name), pg.graph(), pg}); };
    auto add_graph = [&](std::string name, const Graph& g) { out.push_back({std::move(name), g, std::nullopt}); };

    add_plane("K1", single_vertex());
    add_plane("K2", edge());
    for (int n = 3; n <= 9; ++n)
        add_plane("C" + std::to_string(n), cycle(n));
    for (int n = 3; n <= 6; ++n)
        add_plane("P" + std::to_string(n), natural(make_path(n)));
    add_plane("K4", k4());
    for (int l : {3, 5, 8})
        add_plane("star" + std::to_string(l), star(l));
    add_plane("dodecahedron", dodecahedron());
    add_plane("special_face", special_face());
    add_plane("special_configuration", special_configuration());
    add_plane("shared_special_faces", shared_special_faces());
    add_plane("three_vertex_2big", three_vertex_with_big_neighbors(2));
    add_plane("three_vertex_3big", three_vertex_with_big_neighbors(3));
    add_graph("K5", make_complete(5));
    add_graph("K6", make_complete(6));
    {
        Graph k33;
        for (int a = 0; a < 3; ++a)
            for (int b = 3; b < 6; ++b)
                k33.add_edge(a, b);
        add_graph("K33", k33);
    }
    {
        Graph petersen;
        for (int i = 0; i < 5; ++i) {
            petersen.add_edge(i, (i + 1) % 5);
            petersen.add_edge(i, 5 + i);
            petersen.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        add_graph("petersen", petersen);
    }
    for (std::uint64_t s = 0; s < 60; ++s) {
        const int n = 4 + static_cast<int>(s % 9);
        const double p = std::vector<double>{0.2, 0.35, 0.5}[s % 3];
        add_graph("er" + std::to_string(s), random_graph(1000 + s, n, p));
    }
    for (std::uint64_t s = 0; s < 40; ++s) {
        const int n = 3 + static_cast<int>(s % 10);
        add_plane("plane" + std::to_string(s), random_plane_graph(2000 + s, n, static_cast<int>(s % 5)));
    }
    for (std::uint64_t s = 0; s < 40; ++s)
        add_plane("classC" + std::to_string(s), generate_class_C(3000 + s, 8 + static_cast<int>(s % 6) * 8));
    return out;
}

} // namespace fx
