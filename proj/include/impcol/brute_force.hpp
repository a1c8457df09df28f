#pragma once

#include "impcol/solver.hpp"

#include <bit>
#include <cstdint>

namespace impcol {

inline constexpr std::size_t kBruteForceLimit = 20;

/// Exhaustive 2^n scan in lexicographic order (lowest id is the most significant
/// position, 0 before K). Shares no code with the backtracking solver.
inline SolveResult brute_force_solve(const Graph& g, const SolveSpec& spec)
{
    const auto ids = g.vertices();
    const std::size_t n = ids.size();
    if (n > kBruteForceLimit)
        throw ResourceLimit("brute force limited to " + std::to_string(kBruteForceLimit) + " vertices");

    std::map<VertexId, int> bit;
    for (std::size_t i = 0; i < n; ++i)
        bit[ids[i]] = static_cast<int>(n - 1 - i);
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (VertexId w : g.neighbors(ids[i]))
            adj[n - 1 - i] |= std::uint32_t{1} << bit.at(w);
    std::uint32_t must_k = 0, must_zero = 0;
    for (const auto& [v, c] : spec.precoloring) {
        auto it = bit.find(v);
        if (it == bit.end())
            throw ArgumentError("precoloring names unknown vertex " + std::to_string(v));
        (c == Color::K ? must_k : must_zero) |= std::uint32_t{1} << it->second;
    }

    const std::uint32_t all = n == 32 ? ~0u : ((std::uint32_t{1} << n) - 1);
    SolveResult r;
    for (std::uint64_t mask = 0; mask <= all; ++mask) {
        const auto k_set = static_cast<std::uint32_t>(mask);
        if ((k_set & must_k) != must_k || (k_set & must_zero) != 0)
            continue;
        bool ok = true;
        for (std::size_t b = 0; b < n && ok; ++b) {
            const bool is_k = (k_set >> b) & 1u;
            const std::uint32_t same = is_k ? (adj[b] & k_set) : (adj[b] & ~k_set & all);
            ok = std::popcount(same) <= (is_k ? spec.d2 : spec.d1);
        }
        ++r.nodes;
        if (!ok)
            continue;
        r.sat = true;
        for (std::size_t i = 0; i < n; ++i)
            r.coloring[ids[i]] = ((k_set >> (n - 1 - i)) & 1u) ? Color::K : Color::Zero;
        return r;
    }
    r.exhausted = true;
    return r;
}

} // namespace impcol
