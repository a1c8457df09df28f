#pragma once

#include "impcol/coloring.hpp"
#include "impcol/structures.hpp"

namespace impcol {

/// Recoloring of a special structure inside a (0,6)-coloring of its host graph.
/// Only u, the x_i and the y_i change, always towards Zero, so no big vertex gains a
/// K-neighbor. Afterwards every big vertex colored K has a Zero neighbor inside the
/// structure:
///  - all big vertices Zero: nothing changes;
///  - all big vertices K: u becomes Zero;
///  - otherwise each K-colored v_b shares a face with some Zero-colored v_a (first such
///    face in structure order); on that face v_b's private 2-vertex becomes Zero. Its
///    other neighbor is v_a's private 2-vertex, which is K because v_a is Zero.
inline Coloring recolor_special_structure(const Graph& g, const SpecialStructure& s, Coloring c)
{
    if (!verify_coloring(g, c, zero_k(6)).valid)
        throw ArgumentError("recoloring needs a valid (0,6)-coloring");

    const std::size_t nb = s.v.size();
    std::size_t zeros = 0;
    for (VertexId v : s.v)
        if (c.at(v) == Color::Zero)
            ++zeros;
    if (zeros == nb)
        return c;
    if (zeros == 0) {
        c[s.u] = Color::Zero;
        return c;
    }
    // faces[i] joins v_i (private vertex x_i) and v_{i+1} (private vertex y_i). A
    // special face has one face joining v0 (x0) and v1 (y0).
    const std::size_t nfaces = s.kind == SpecialStructure::Kind::SpecialFace ? 1 : 3;
    for (std::size_t b = 0; b < nb; ++b) {
        if (c.at(s.v[b]) != Color::K)
            continue;
        for (std::size_t i = 0; i < nfaces; ++i) {
            const std::size_t lo = i, hi = (i + 1) % nb;
            if (b == lo && c.at(s.v[hi]) == Color::Zero) {
                c[s.x[i]] = Color::Zero;
                break;
            }
            if (b == hi && c.at(s.v[lo]) == Color::Zero) {
                c[s.y[i]] = Color::Zero;
                break;
            }
        }
    }
    return c;
}

} // namespace impcol
