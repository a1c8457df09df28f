#pragma once

#include "impcol/coloring.hpp"
#include "impcol/plane_graph.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace impcol {

/// Contents of a graph file.
///
///     graph <name>
///     vertex <id> [rot <n1> ... <nk>]     clockwise rotation
///     edge <u> <v> [gadget]               `gadget` marks a template edge; repeating a
///                                         marked edge requests another parallel copy
///     precolor <id> 0|K
///     terminal <role> <id>                role in {x, y, u1, u3, u5}
///
/// '#' starts a comment. Edges may mention undeclared vertices. The file is a plane
/// graph iff every vertex carries `rot`.
struct GraphFile {
    std::string name = "g";
    Graph graph;
    std::optional<Rotation> rotation;
    Coloring precoloring;
    std::map<std::string, VertexId> terminals;
    std::vector<std::pair<VertexId, VertexId>> marked;

    bool is_plane() const { return rotation.has_value(); }

    PlaneGraph plane() const
    {
        if (!rotation)
            throw ArgumentError("graph '" + name + "' carries no rotation system");
        return PlaneGraph(graph, *rotation);
    }
};

inline const std::set<std::string>& terminal_roles()
{
    static const std::set<std::string> roles{"x", "y", "u1", "u3", "u5"};
    return roles;
}

inline GraphFile parse_graph(std::istream& in)
{
    GraphFile gf;
    Rotation rot;
    std::set<std::pair<VertexId, VertexId>> plain;
    std::set<std::pair<VertexId, VertexId>> marked_pairs;
    std::set<VertexId> declared;
    std::vector<std::pair<int, std::pair<VertexId, Color>>> precolor_lines;
    std::vector<std::pair<int, std::pair<std::string, VertexId>>> terminal_lines;

    std::string raw;
    int lineno = 0;
    auto parse_id = [&](const std::string& tok) {
        std::size_t used = 0;
        long value = -1;
        try {
            value = std::stol(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || value < 0 || value > 1'000'000'000)
            throw ParseError(lineno, "bad vertex id '" + tok + "'");
        return static_cast<VertexId>(value);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        const std::string& kw = tok[0];
        if (kw == "graph") {
            if (tok.size() != 2)
                throw ParseError(lineno, "expected 'graph <name>'");
            gf.name = tok[1];
        } else if (kw == "vertex") {
            if (tok.size() < 2 || (tok.size() > 2 && tok[2] != "rot"))
                throw ParseError(lineno, "expected 'vertex <id> [rot <ids>...]'");
            VertexId v = parse_id(tok[1]);
            if (!declared.insert(v).second)
                throw ParseError(lineno, "vertex " + tok[1] + " declared twice");
            gf.graph.add_vertex(v);
            if (tok.size() > 2) {
                std::vector<VertexId> order;
                for (std::size_t i = 3; i < tok.size(); ++i)
                    order.push_back(parse_id(tok[i]));
                rot[v] = std::move(order);
            }
        } else if (kw == "edge") {
            if (tok.size() != 3 && !(tok.size() == 4 && tok[3] == "gadget"))
                throw ParseError(lineno, "expected 'edge <u> <v> [gadget]'");
            VertexId u = parse_id(tok[1]);
            VertexId v = parse_id(tok[2]);
            if (u == v)
                throw ParseError(lineno, "self-loop at " + tok[1]);
            const std::pair<VertexId, VertexId> key{std::min(u, v), std::max(u, v)};
            const bool is_marked = tok.size() == 4;
            if (plain.count(key) || (!is_marked && marked_pairs.count(key)))
                throw ParseError(lineno, "duplicate edge " + tok[1] + " " + tok[2]);
            if (is_marked) {
                gf.marked.emplace_back(key.first, key.second);
                if (!marked_pairs.insert(key).second)
                    continue;
            } else {
                plain.insert(key);
            }
            gf.graph.add_edge(u, v);
        } else if (kw == "precolor") {
            if (tok.size() != 3)
                throw ParseError(lineno, "expected 'precolor <id> 0|K'");
            auto c = parse_color(tok[2]);
            if (!c)
                throw ParseError(lineno, "color must be 0 or K, got '" + tok[2] + "'");
            precolor_lines.push_back({lineno, {parse_id(tok[1]), *c}});
        } else if (kw == "terminal") {
            if (tok.size() != 3 || !terminal_roles().count(tok[1]))
                throw ParseError(lineno, "expected 'terminal x|y|u1|u3|u5 <id>'");
            terminal_lines.push_back({lineno, {tok[1], parse_id(tok[2])}});
        } else {
            throw ParseError(lineno, "unknown directive '" + kw + "'");
        }
    }

    for (const auto& [line, pc] : precolor_lines) {
        if (!gf.graph.has_vertex(pc.first))
            throw ParseError(line, "precolor of unknown vertex " + std::to_string(pc.first));
        if (!gf.precoloring.emplace(pc.first, pc.second).second)
            throw ParseError(line, "vertex " + std::to_string(pc.first) + " precolored twice");
    }
    for (const auto& [line, t] : terminal_lines) {
        if (!gf.graph.has_vertex(t.second))
            throw ParseError(line, "terminal on unknown vertex " + std::to_string(t.second));
        if (!gf.terminals.emplace(t.first, t.second).second)
            throw ParseError(line, "terminal role " + t.first + " given twice");
    }

    for (const auto& [v, order] : rot) {
        std::set<VertexId> listed(order.begin(), order.end());
        if (listed.size() != order.size() || listed != gf.graph.neighbors(v))
            throw ParseError(lineno, "rotation at " + std::to_string(v)
                                         + " does not match its edges (asymmetric rotation)");
    }
    bool all_rot = !gf.graph.empty();
    for (VertexId v : gf.graph.vertices())
        if (!rot.count(v))
            all_rot = false;
    if (all_rot)
        gf.rotation = std::move(rot);
    return gf;
}

inline GraphFile parse_graph_string(const std::string& text)
{
    std::istringstream in(text);
    return parse_graph(in);
}

inline GraphFile read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("cannot open '" + path + "'");
    return parse_graph(in);
}

inline void write_graph(std::ostream& out, const GraphFile& gf)
{
    out << "graph " << gf.name << '\n';
    for (VertexId v : gf.graph.vertices()) {
        out << "vertex " << v;
        if (gf.rotation) {
            out << " rot";
            for (VertexId w : gf.rotation->at(v))
                out << ' ' << w;
        }
        out << '\n';
    }
    std::multiset<std::pair<VertexId, VertexId>> marked(gf.marked.begin(), gf.marked.end());
    for (auto e : gf.graph.edges()) {
        auto n = marked.count(e);
        if (n == 0)
            out << "edge " << e.first << ' ' << e.second << '\n';
        for (std::size_t i = 0; i < n; ++i)
            out << "edge " << e.first << ' ' << e.second << " gadget\n";
    }
    for (const auto& [v, c] : gf.precoloring)
        out << "precolor " << v << ' ' << color_char(c) << '\n';
    for (const auto& role : terminal_roles()) {
        auto it = gf.terminals.find(role);
        if (it != gf.terminals.end())
            out << "terminal " << role << ' ' << it->second << '\n';
    }
}

inline GraphFile to_file(const Graph& g, std::string name = "g")
{
    GraphFile gf;
    gf.name = std::move(name);
    gf.graph = g;
    return gf;
}

inline GraphFile to_file(const PlaneGraph& pg, std::string name = "g")
{
    GraphFile gf = to_file(pg.graph(), std::move(name));
    gf.rotation = pg.rotation();
    return gf;
}

} // namespace impcol
