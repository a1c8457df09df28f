#pragma once

#include "impcol/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace impcol {

/// Zero: the independent (d1-bounded) class. K: the d2-bounded class.
enum class Color : unsigned char { Zero = 0, K = 1 };

inline char color_char(Color c) { return c == Color::Zero ? '0' : 'K'; }

inline std::optional<Color> parse_color(const std::string& s)
{
    if (s == "0")
        return Color::Zero;
    if (s == "K" || s == "k")
        return Color::K;
    return std::nullopt;
}

inline Color other(Color c) { return c == Color::Zero ? Color::K : Color::Zero; }

/// Partial assignment vertex -> color.
using Coloring = std::map<VertexId, Color>;

struct SolveSpec {
    int d1 = 0;
    int d2 = 0;
    Coloring precoloring;

    int budget(Color c) const { return c == Color::Zero ? d1 : d2; }
};

inline SolveSpec zero_k(int k, Coloring pre = {}) { return SolveSpec{0, k, std::move(pre)}; }

/// Number of neighbors of v sharing its color under c (unassigned neighbors ignored).
inline int same_color_degree(const Graph& g, const Coloring& c, VertexId v)
{
    const Color mine = c.at(v);
    int same = 0;
    for (VertexId w : g.neighbors(v)) {
        auto it = c.find(w);
        if (it != c.end() && it->second == mine)
            ++same;
    }
    return same;
}

struct Violation {
    enum class Kind { DegreeBound, PrecoloringMismatch };
    Kind kind;
    VertexId vertex;
    Color color;
    int same_color_degree;
};

struct VerifyResult {
    bool valid = true;
    std::vector<Violation> violations;
};

/// Checks a total coloring against both degree bounds and the precoloring.
inline VerifyResult verify_coloring(const Graph& g, const Coloring& c, const SolveSpec& spec)
{
    std::string missing;
    for (VertexId v : g.vertices())
        if (!c.count(v))
            missing += (missing.empty() ? "" : " ") + std::to_string(v);
    if (!missing.empty())
        throw ArgumentError("coloring is partial; unassigned: " + missing);
    for (const auto& [v, _] : c)
        if (!g.has_vertex(v))
            throw ArgumentError("coloring assigns unknown vertex " + std::to_string(v));

    VerifyResult r;
    for (VertexId v : g.vertices()) {
        const Color col = c.at(v);
        const int same = same_color_degree(g, c, v);
        if (same > spec.budget(col))
            r.violations.push_back({Violation::Kind::DegreeBound, v, col, same});
        auto pre = spec.precoloring.find(v);
        if (pre != spec.precoloring.end() && pre->second != col)
            r.violations.push_back({Violation::Kind::PrecoloringMismatch, v, col, same});
    }
    r.valid = r.violations.empty();
    return r;
}

inline bool is_valid(const Graph& g, const Coloring& c, const SolveSpec& spec)
{
    return verify_coloring(g, c, spec).valid;
}

} // namespace impcol
