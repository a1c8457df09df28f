#pragma once

#include "impcol/rational.hpp"
#include "impcol/structures.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>

namespace impcol {

/// A vertex (by id) or a plane face (by index into plane_faces()).
struct Element {
    enum class Kind { Vertex, Face };
    Kind kind;
    int id;

    static Element vertex(VertexId v) { return {Kind::Vertex, v}; }
    static Element face(int f) { return {Kind::Face, f}; }

    friend auto operator<=>(const Element&, const Element&) = default;
};

inline std::string to_string(const Element& e)
{
    return (e.kind == Element::Kind::Vertex ? "v" : "f") + std::to_string(e.id);
}

enum class Rule { Step1 = 1, Step2, Step3, Step4, Step5, MinDeg };

inline std::string to_string(Rule r) { return r == Rule::MinDeg ? "MINDEG" : std::to_string(static_cast<int>(r)); }

struct Transfer {
    Rule rule;
    Element source;
    Element target;
    Rational amount;
};

struct ChargeLedger {
    std::map<Element, Rational> initial;
    std::map<Element, Rational> final;
    std::vector<Transfer> transfers;

    Rational total_initial() const { return sum(initial); }
    Rational total_final() const { return sum(final); }

    /// Sum of amounts received by e, optionally restricted to one rule.
    Rational received(const Element& e, std::optional<Rule> rule = std::nullopt) const
    {
        Rational s(0);
        for (const auto& t : transfers)
            if (t.target == e && (!rule || t.rule == *rule))
                s += t.amount;
        return s;
    }

    Rational given(const Element& e, std::optional<Rule> rule = std::nullopt) const
    {
        Rational s(0);
        for (const auto& t : transfers)
            if (t.source == e && (!rule || t.rule == *rule))
                s += t.amount;
        return s;
    }

private:
    static Rational sum(const std::map<Element, Rational>& m)
    {
        Rational s(0);
        for (const auto& [_, r] : m)
            s += r;
        return s;
    }
};

struct RuleSet {
    enum class Tag { Main06, MinDeg };
    Tag tag = Tag::Main06;
    int k = 0;

    static RuleSet main06() { return {Tag::Main06, 0}; }
    static RuleSet mindeg(int k)
    {
        if (k < 3)
            throw ArgumentError("MINDEG needs k >= 3, got " + std::to_string(k));
        return {Tag::MinDeg, k};
    }
};

/// Main06: d - 4 on every vertex and every plane face. MinDeg: d on every vertex.
inline ChargeLedger initial_charges(const PlaneGraph& pg, const RuleSet& rs)
{
    const Graph& g = pg.graph();
    ChargeLedger ledger;
    for (VertexId v : g.vertices())
        ledger.initial[Element::vertex(v)] = Rational(rs.tag == RuleSet::Tag::Main06 ? g.degree(v) - 4 : g.degree(v));
    if (rs.tag == RuleSet::Tag::Main06) {
        const FaceSet fs = plane_faces(pg);
        for (std::size_t i = 0; i < fs.faces.size(); ++i)
            ledger.initial[Element::face(static_cast<int>(i))] = Rational(fs.faces[i].degree() - 4);
    }
    ledger.final = ledger.initial;
    return ledger;
}

namespace detail {

inline void settle(ChargeLedger& ledger)
{
    std::stable_sort(ledger.transfers.begin(), ledger.transfers.end(), [](const Transfer& a, const Transfer& b) {
        return std::tie(a.rule, a.source, a.target) < std::tie(b.rule, b.source, b.target);
    });
    ledger.final = ledger.initial;
    for (const auto& t : ledger.transfers) {
        ledger.final[t.source] -= t.amount;
        ledger.final[t.target] += t.amount;
    }
}

} // namespace detail

/// Runs the discharging rules and logs every transfer.
///
/// Main06 (amounts depend only on structure; log order is step, source, target):
///  1. every 8+-vertex gives 1/2 to each 7−-neighbor, 1/2 to each special face it
///     sponsors and 1/2 to the 3-vertex of each special configuration it sponsors;
///     for every edge vw between 8+-vertices, v and w each give 1/4 to the face on
///     each side of vw (an edge with one face on both sides pays that face twice);
///  2. every vertex of degree 3..7 gives 1/2 to each 2-neighbor, and 1/2 to a 5-face
///     for each corner where its two face-neighbors are 8+ and the other two
///     boundary vertices are 2-vertices;
///  3. every face gives 1/4 per corner of a degree 3..7 vertex with an 8+-vertex
///     beside it on the walk;
///  4. every 5-face gives, per 2-vertex corner, 5/8 if that vertex has a
///     2-neighbor and 1/4 otherwise;
///  5. every 7+-face gives, per 2-vertex corner: 7/8 (on a 5-face, has a
///     2-neighbor), 3/4 (on a 5-face, none), 3/4 (not on a 5-face, has one),
///     1/2 (neither).
/// Faces of degree 6 or at most 4 give nothing in steps 4 and 5.
///
/// MinDeg: every 5+-vertex gives 1/3 to each adjacent 3-vertex.
inline ChargeLedger apply_rules(const PlaneGraph& pg, const RuleSet& rs)
{
    const Graph& g = pg.graph();
    ChargeLedger ledger = initial_charges(pg, rs);
    auto give = [&ledger](Rule r, Element from, Element to, Rational amount) {
        ledger.transfers.push_back({r, from, to, amount});
    };
    const Rational quarter(1, 4), half(1, 2), five_eighths(5, 8), three_quarters(3, 4), seven_eighths(7, 8);

    if (rs.tag == RuleSet::Tag::MinDeg) {
        for (VertexId v : g.vertices())
            if (g.degree(v) >= 5)
                for (VertexId w : g.neighbors(v))
                    if (g.degree(w) == 3)
                        give(Rule::MinDeg, Element::vertex(v), Element::vertex(w), Rational(1, 3));
        detail::settle(ledger);
        return ledger;
    }

    const FaceSet fs = plane_faces(pg);
    const auto structures = find_special_structures(pg, fs);
    const StructureHypergraph h = choose_roots_and_sponsor(build_hypergraph(pg, structures));
    auto big = [&g](VertexId v) { return is_big(g, v); };
    auto mid = [&g](VertexId v) { return g.degree(v) >= 3 && g.degree(v) < kBigDegree; };

    // Step 1.
    for (VertexId v : g.vertices()) {
        if (!big(v))
            continue;
        for (VertexId w : g.neighbors(v)) {
            if (!big(w)) {
                give(Rule::Step1, Element::vertex(v), Element::vertex(w), half);
            } else {
                give(Rule::Step1, Element::vertex(v), Element::face(fs.face_of(v, w)), quarter);
                give(Rule::Step1, Element::vertex(v), Element::face(fs.face_of(w, v)), quarter);
            }
        }
    }
    for (std::size_t i = 0; i < structures.size(); ++i) {
        const auto& s = structures[i];
        const Element target = s.kind == SpecialStructure::Kind::SpecialFace ? Element::face(s.faces.front())
                                                                             : Element::vertex(s.u);
        give(Rule::Step1, Element::vertex(h.sponsor[i]), target, half);
    }

    // Step 2.
    for (VertexId v : g.vertices())
        if (mid(v))
            for (VertexId w : g.neighbors(v))
                if (g.degree(w) == 2)
                    give(Rule::Step2, Element::vertex(v), Element::vertex(w), half);
    for (std::size_t fi = 0; fi < fs.faces.size(); ++fi) {
        const Face& f = fs.faces[fi];
        if (f.degree() != 5 || !f.single_walk())
            continue;
        const auto& walk = f.walks.front();
        for (int i = 0; i < 5; ++i) {
            const VertexId v = walk[i].tail;
            if (!mid(v))
                continue;
            const VertexId prev = walk[(i + 4) % 5].tail, next = walk[(i + 1) % 5].tail;
            const VertexId far1 = walk[(i + 2) % 5].tail, far2 = walk[(i + 3) % 5].tail;
            if (big(prev) && big(next) && g.degree(far1) == 2 && g.degree(far2) == 2)
                give(Rule::Step2, Element::vertex(v), Element::face(static_cast<int>(fi)), half);
        }
    }

    // Steps 3-5 are paid by faces, per corner.
    auto on_five_face = [&](VertexId v) {
        for (int f : fs.faces_at(pg, v))
            if (fs.faces[f].degree() == 5)
                return true;
        return false;
    };
    auto has_two_neighbor = [&g](VertexId v) {
        const auto& nb = g.neighbors(v);
        return std::any_of(nb.begin(), nb.end(), [&g](VertexId w) { return g.degree(w) == 2; });
    };
    for (std::size_t fi = 0; fi < fs.faces.size(); ++fi) {
        const Face& f = fs.faces[fi];
        const Element face = Element::face(static_cast<int>(fi));
        const int d = f.degree();
        for (const Corner& c : f.corners()) {
            const int dv = g.degree(c.vertex);
            const Element target = Element::vertex(c.vertex);
            if (mid(c.vertex) && (big(c.prev) || big(c.next)))
                give(Rule::Step3, face, target, quarter);
            if (dv != 2)
                continue;
            const bool two_nbr = has_two_neighbor(c.vertex);
            if (d == 5) {
                give(Rule::Step4, face, target, two_nbr ? five_eighths : quarter);
            } else if (d >= 7) {
                const bool five = on_five_face(c.vertex);
                const Rational amount = five ? (two_nbr ? seven_eighths : three_quarters)
                                             : (two_nbr ? three_quarters : half);
                give(Rule::Step5, face, target, amount);
            }
        }
    }

    detail::settle(ledger);
    return ledger;
}

/// Source and target of every transfer are adjacent vertices or a vertex and a face
/// on whose boundary it lies.
inline bool transfers_are_local(const PlaneGraph& pg, const ChargeLedger& ledger)
{
    const FaceSet fs = plane_faces(pg);
    auto incident = [&](VertexId v, int f) {
        const auto b = fs.faces.at(f).boundary();
        return std::find(b.begin(), b.end(), v) != b.end();
    };
    for (const auto& t : ledger.transfers) {
        using K = Element::Kind;
        if (t.source.kind == K::Vertex && t.target.kind == K::Vertex) {
            if (!pg.graph().has_edge(t.source.id, t.target.id))
                return false;
        } else if (t.source.kind == K::Vertex && t.target.kind == K::Face) {
            if (!incident(t.source.id, t.target.id))
                return false;
        } else if (t.source.kind == K::Face && t.target.kind == K::Vertex) {
            if (!incident(t.target.id, t.source.id))
                return false;
        } else {
            return false;
        }
    }
    return true;
}

/// Line-oriented ledger dump: CHARGE lines (vertices, then faces), XFER lines in log
/// order, then TOTAL.
inline void write_ledger(std::ostream& out, const ChargeLedger& ledger)
{
    for (const auto& [e, init] : ledger.initial)
        out << "CHARGE " << (e.kind == Element::Kind::Vertex ? "v " : "f ") << e.id << ' ' << to_string(init)
            << " -> " << to_string(ledger.final.at(e)) << '\n';
    for (const auto& t : ledger.transfers)
        out << "XFER " << to_string(t.rule) << ' ' << to_string(t.source) << ' ' << to_string(t.target) << ' '
            << to_string(t.amount) << '\n';
    out << "TOTAL " << to_string(ledger.total_final()) << '\n';
}

} // namespace impcol
