#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace impcol;

namespace {

/// Every (0,k)-coloring by a 2^n scan, checked for the u3 condition.
std::pair<bool, bool> brute_u3(const TerminalGadget& t, int k)
{
    const auto ids = t.graph.vertices();
    const int n = static_cast<int>(ids.size());
    const VertexId u3 = t.terminal("u3");
    bool any = false, all = true;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Coloring c;
        for (int i = 0; i < n; ++i)
            c[ids[i]] = (mask >> i & 1) ? Color::K : Color::Zero;
        if (!oracle::valid_coloring(t.graph, c, 0, k))
            continue;
        any = true;
        int kn = 0;
        for (VertexId w : t.graph.neighbors(u3))
            kn += c[w] == Color::K;
        all = all && c[u3] == Color::K && kn == 1;
    }
    return {any, any && all};
}

TerminalGadget plain(const Graph& g, std::map<std::string, VertexId> terminals)
{
    TerminalGadget t;
    t.graph = g;
    t.terminals = std::move(terminals);
    return t;
}

GadgetTemplate parallel_template(int copies, VertexId u = 0, VertexId v = 1)
{
    GadgetTemplate t;
    t.graph.add_edge(u, v);
    for (int i = 0; i < copies; ++i)
        t.marked.emplace_back(u, v);
    return t;
}

} // namespace

TEST(PathGadget, CycleSevenBecomesCycleNine)
{
    const TerminalGadget t = build_path_gadget(fx::cycle(7), 3);
    EXPECT_EQ(t.graph.num_vertices(), 9u);
    EXPECT_EQ(t.graph.num_edges(), 9u);
    EXPECT_EQ(girth(t.graph), 9);
    for (VertexId v : t.graph.vertices())
        EXPECT_EQ(t.graph.degree(v), 2);
    EXPECT_EQ(t.terminal("u1"), 2);
    EXPECT_EQ(t.terminal("u5"), 4);
    const VertexId u3 = t.terminal("u3");
    EXPECT_FALSE(t.graph.has_edge(u3, 2));
    EXPECT_FALSE(t.graph.has_edge(u3, 4));
    ASSERT_TRUE(t.rotation);
    EXPECT_TRUE(euler_check(PlaneGraph(t.graph, *t.rotation)).is_plane);
}

TEST(PathGadget, VertexCountAndClassPreservation)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const PlaneGraph h = generate_class_C(seed, 30);
        for (VertexId v : h.graph().vertices()) {
            if (h.graph().degree(v) != 2)
                continue;
            const TerminalGadget t = build_path_gadget(h, v);
            EXPECT_EQ(t.graph.num_vertices(), h.graph().num_vertices() + 2);
            EXPECT_TRUE(in_class_C(PlaneGraph(t.graph, *t.rotation)));
            break;
        }
    }
}

TEST(PathGadget, RequiresTwoVertex)
{
    EXPECT_THROW(build_path_gadget(make_star(3), 0), ArgumentError);
    EXPECT_THROW(build_path_gadget(make_star(3), 1), ArgumentError);
}

TEST(U3Forcing, Examples)
{
    const auto k2 = verify_u3_forcing(plain(make_path(2), {{"u3", 0}}), 1);
    EXPECT_TRUE(k2.colorable);
    EXPECT_FALSE(k2.forcing);
    const auto c3 = verify_u3_forcing(plain(make_cycle(3), {{"u3", 1}}), 1);
    EXPECT_TRUE(c3.colorable);
    EXPECT_FALSE(c3.forcing);
    const auto none = verify_u3_forcing(plain(make_complete(5), {{"u3", 0}}), 1);
    EXPECT_FALSE(none.colorable);
    EXPECT_FALSE(none.forcing);
}

TEST(U3Forcing, FixtureGadgetsCertified)
{
    for (int k : {2, 3}) {
        const TerminalGadget t = fx::u3_gadget(k);
        const auto brute = brute_u3(t, k);
        EXPECT_TRUE(brute.first);
        EXPECT_TRUE(brute.second);
        const auto e = verify_u3_forcing(t, k, ForcingMethod::Enumerate);
        EXPECT_TRUE(e.colorable);
        EXPECT_TRUE(e.forcing);
        const auto s = verify_u3_forcing(t, k, ForcingMethod::Solver);
        EXPECT_TRUE(s.colorable);
        EXPECT_TRUE(s.forcing);
        // Not forcing for the other k.
        const int other = k == 2 ? 3 : 2;
        EXPECT_EQ(verify_u3_forcing(t, other).forcing, brute_u3(t, other).second);
    }
}

TEST(U3Forcing, MethodsAgreeWithBruteForce)
{
    for (std::uint64_t s = 0; s < 80; ++s) {
        const Graph g = fx::random_graph(4000 + s, 5 + static_cast<int>(s % 5), 0.45);
        for (VertexId u3 : {0, 2}) {
            const TerminalGadget t = plain(g, {{"u3", u3}});
            for (int k : {1, 2}) {
                const auto brute = brute_u3(t, k);
                const auto e = verify_u3_forcing(t, k, ForcingMethod::Enumerate);
                const auto q = verify_u3_forcing(t, k, ForcingMethod::Solver);
                EXPECT_EQ(e.colorable, brute.first);
                EXPECT_EQ(e.forcing, brute.second);
                EXPECT_EQ(q.colorable, brute.first);
                EXPECT_EQ(q.forcing, brute.second);
            }
        }
    }
}

TEST(U3Forcing, ThresholdAndMissingTerminal)
{
    const TerminalGadget big = plain(make_path(31), {{"u3", 0}});
    EXPECT_THROW(verify_u3_forcing(big, 1), ResourceLimit);
    EXPECT_NO_THROW(verify_u3_forcing(big, 1, ForcingMethod::Solver));
    EXPECT_THROW(verify_u3_forcing(plain(make_path(3), {}), 1), ArgumentError);
}

TEST(U3Forcing, PathGadgetPremise)
{
    // If every (0,k)-coloring of h - v gives u1, u5 different colors with the K side
    // saturated, the path gadget is u3-forcing. Check the implication on the fixtures
    // and on a sweep of small graphs.
    int premise_held = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        Graph h = fx::random_graph(6000 + s, 6, 0.5);
        const VertexId v = h.next_free_id();
        h.add_edge(v, 0);
        h.add_edge(v, 1);
        for (int k : {1, 2}) {
            Graph hv = h;
            hv.remove_vertex(v);
            const auto all = enumerate_colorings(hv, zero_k(k));
            bool premise = !all.empty();
            for (const auto& c : all) {
                if (c.at(0) == c.at(1)) {
                    premise = false;
                    break;
                }
                const VertexId kside = c.at(0) == Color::K ? 0 : 1;
                int kn = 0;
                for (VertexId w : hv.neighbors(kside))
                    kn += c.at(w) == Color::K;
                if (kn != k) {
                    premise = false;
                    break;
                }
            }
            if (!premise)
                continue;
            ++premise_held;
            const auto t = build_path_gadget(h, v);
            EXPECT_TRUE(verify_u3_forcing(t, k).forcing) << s;
        }
    }
    SUCCEED() << premise_held << " instances met the premise";
}

TEST(Reduce, SizeAndShape)
{
    const TerminalGadget t = fx::u3_gadget(2);
    const Graph g = make_cycle(5);
    EXPECT_EQ(reduce_01_to_0k(g, t, 1), g);
    const Graph r = reduce_01_to_0k(g, t, 3);
    EXPECT_EQ(r.num_vertices(), 5u + 5u * 2u * t.graph.num_vertices());
    EXPECT_EQ(r.num_edges(), 5u + 5u * 2u * (t.graph.num_edges() + 1));
    EXPECT_EQ(r.degree(0), 2 + 2);
    EXPECT_THROW(reduce_01_to_0k(g, t, 0), ArgumentError);

    Graph one;
    one.add_vertex(0);
    const Graph r1 = reduce_01_to_0k(one, t, 3);
    EXPECT_EQ(r1.num_vertices(), 1u + 2u * t.graph.num_vertices());
    EXPECT_EQ(r1.degree(0), 2);
    EXPECT_EQ(r1.num_edges(), 2u * t.graph.num_edges() + 2u);
}

TEST(Reduce, FreshIdBlocks)
{
    const TerminalGadget t = fx::u3_gadget(2);
    const Graph g = make_path(2);
    const Graph r = reduce_01_to_0k(g, t, 2);
    // Vertex 0's copy uses ids 2..7, vertex 1's uses 8..13; u3 is gadget vertex 4.
    EXPECT_TRUE(r.has_edge(0, 2 + 4));
    EXPECT_TRUE(r.has_edge(1, 8 + 4));
    EXPECT_EQ(r.next_free_id(), 14);
}

TEST(Reduce, PlaneVersionStaysPlane)
{
    const TerminalGadget t = build_path_gadget(fx::cycle(7), 0);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const PlaneGraph g = generate_class_C(seed, 20);
        const PlaneGraph r = reduce_01_to_0k(g, t, 3);
        EXPECT_TRUE(euler_check(r).is_plane);
        EXPECT_TRUE(in_class_C(r));
        EXPECT_EQ(r.graph(), reduce_01_to_0k(g.graph(), t, 3));
        EXPECT_GE(girth(r.graph()).value_or(1000), std::min(girth(g.graph()).value_or(1000), 9));
    }
}

TEST(Reduce, EquivalenceOnSmallGraphs)
{
    for (int k : {2, 3}) {
        const TerminalGadget t = fx::u3_gadget(k);
        for (std::uint64_t s = 0; s < 15; ++s) {
            const Graph g = fx::random_graph(8000 + s, 3 + static_cast<int>(s % 6), 0.5);
            EXPECT_EQ(is_colorable(g, zero_k(1)), is_colorable(reduce_01_to_0k(g, t, k), zero_k(k))) << s;
        }
    }
}

TEST(ForcingPair, Examples)
{
    const auto k2 = verify_forcing_pair(plain(make_path(2), {{"x", 0}, {"y", 1}}), 3);
    EXPECT_TRUE(k2.colorable);
    EXPECT_TRUE(k2.forcing);
    const auto p3 = verify_forcing_pair(plain(make_path(3), {{"x", 0}, {"y", 2}}), 3);
    EXPECT_TRUE(p3.colorable);
    EXPECT_FALSE(p3.forcing);
    const auto p4 = verify_forcing_pair(fx::p4_pair_gadget(), 2);
    EXPECT_TRUE(p4.forcing);
    EXPECT_THROW(verify_forcing_pair(plain(make_path(3), {{"x", 0}}), 3), ArgumentError);
}

TEST(ForcingPair, AgreesWithEnumeration)
{
    for (std::uint64_t s = 0; s < 60; ++s) {
        const Graph g = fx::random_graph(9000 + s, 7, 0.35);
        const TerminalGadget t = plain(g, {{"x", 0}, {"y", 6}});
        for (int k : {1, 2, 3}) {
            bool exists = false;
            for (const auto& c : enumerate_colorings(g, zero_k(k))) {
                bool all_zero = true;
                for (VertexId w : g.neighbors(0))
                    all_zero = all_zero && c.at(w) == Color::Zero;
                for (VertexId w : g.neighbors(6))
                    all_zero = all_zero && c.at(w) == Color::Zero;
                exists = exists || all_zero;
            }
            EXPECT_EQ(verify_forcing_pair(t, k).forcing, !exists) << s << " k=" << k;
        }
    }
}

TEST(ForcingPair, ThresholdIsResourceError)
{
    EXPECT_THROW(verify_forcing_pair(plain(make_path(30), {{"x", 0}, {"y", 29}}), 3, 20), ResourceLimit);
}

TEST(Compose, SingleMarkedEdgeWithPath)
{
    const Composition c = compose_parallel(parallel_template(1), fx::path_pair_gadget());
    Graph expected;
    expected.add_edge(0, 2);
    expected.add_edge(2, 1);
    EXPECT_EQ(c.graph, expected);
}

TEST(Compose, TwoParallelConnectionsMakeFourCycle)
{
    const Composition c = compose_parallel(parallel_template(2), fx::path_pair_gadget());
    EXPECT_EQ(c.graph.num_vertices(), 4u);
    EXPECT_EQ(c.graph.num_edges(), 4u);
    EXPECT_EQ(girth(c.graph), 4);
    EXPECT_TRUE(c.graph.has_edge(0, 2) && c.graph.has_edge(2, 1));
    EXPECT_TRUE(c.graph.has_edge(0, 3) && c.graph.has_edge(3, 1));
}

TEST(Compose, SevenCopies)
{
    const TerminalGadget p4 = fx::p4_pair_gadget();
    const Composition c = compose_parallel(parallel_template(7), p4);
    EXPECT_EQ(c.graph.num_vertices(), 2u + 7u * 2u);
    EXPECT_EQ(c.graph.degree(0), 7);
    EXPECT_EQ(c.graph.degree(1), 7);
    EXPECT_FALSE(c.graph.has_edge(0, 1));
}

TEST(Compose, UnmarkedEdgesKept)
{
    GadgetTemplate t;
    t.graph = make_cycle(4);
    t.marked = {{0, 1}};
    const Composition c = compose_parallel(t, fx::path_pair_gadget());
    EXPECT_TRUE(c.graph.has_edge(1, 2));
    EXPECT_TRUE(c.graph.has_edge(2, 3));
    EXPECT_TRUE(c.graph.has_edge(3, 0));
    EXPECT_FALSE(c.graph.has_edge(0, 1));
    EXPECT_EQ(girth(c.graph), 5);
}

TEST(Compose, Errors)
{
    EXPECT_THROW(compose_parallel(parallel_template(1), plain(make_path(2), {{"x", 0}, {"y", 1}})), ArgumentError);
    GadgetTemplate bad;
    bad.graph = make_path(3);
    bad.marked = {{0, 2}};
    EXPECT_THROW(compose_parallel(bad, fx::path_pair_gadget()), ArgumentError);
}

TEST(Compose, Pigeonhole)
{
    const TerminalGadget p4 = fx::p4_pair_gadget();
    for (int k : {1, 2, 3}) {
        const Composition over = compose_parallel(parallel_template(2 * k + 1), p4);
        EXPECT_FALSE(is_colorable(over.graph, zero_k(k, {{0, Color::K}, {1, Color::K}})));
        const Composition tight = compose_parallel(parallel_template(2 * k), p4);
        EXPECT_TRUE(is_colorable(tight.graph, zero_k(k, {{0, Color::K}, {1, Color::K}})));
    }
}

TEST(Compose, EmbeddedCompositionIsPlane)
{
    // Templates: random plane graphs with every edge marked once; gadgets embedded.
    const std::vector<TerminalGadget> gadgets{fx::p4_pair_gadget(), fx::path_pair_gadget(), [] {
                                                  // A 5-cycle with x, y at distance 2 plus a chord-free tail.
                                                  TerminalGadget t;
                                                  t.graph = make_cycle(5);
                                                  t.graph.add_edge(2, 5);
                                                  t.rotation = fx::natural(t.graph).rotation();
                                                  t.terminals = {{"x", 0}, {"y", 2}};
                                                  return t;
                                              }()};
    for (const auto& gadget : gadgets) {
        ASSERT_TRUE(euler_check(PlaneGraph(gadget.graph, *gadget.rotation)).is_plane);
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const PlaneGraph base = random_plane_graph(seed, 3 + static_cast<int>(seed % 8), static_cast<int>(seed % 4));
            GadgetTemplate t{base.graph(), {}, base.rotation()};
            const auto edges = base.graph().edges();
            for (std::size_t i = 0; i < edges.size(); i += 2)
                t.marked.push_back(edges[i]);
            const Composition c = compose_parallel(t, gadget);
            ASSERT_TRUE(c.rotation);
            const PlaneGraph out(c.graph, *c.rotation);
            EXPECT_TRUE(euler_check(out).is_plane) << seed;
            EXPECT_TRUE(euler_check(out).connected);
        }
    }
}
