#pragma once

#include "impcol/coloring.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

namespace impcol {

struct SolverOptions {
    std::chrono::milliseconds timeout{60'000};
};

struct SolveResult {
    bool sat = false;
    Coloring coloring;      // total when sat
    bool exhausted = false; // unsat verdict backed by a complete search
    std::uint64_t nodes = 0;
};

namespace detail {

/// Backtracking over vertices in ascending id order, Zero tried before K, with
/// propagation to a fixpoint after every decision:
///  - a vertex whose same-color budget is full forces its unassigned neighbors to
///    the other color (covers "Zero forces neighbors to K" when d1 = 0 and
///    "K with d2 K-neighbors forces the rest to Zero");
///  - an unassigned vertex that already has more same-color neighbors than a
///    class allows loses that color;
///  - any vertex over budget is a conflict.
/// All rules are sound, so solutions come out in lexicographic order.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, const SolveSpec& spec, const SolverOptions& opts)
        : ids_(g.vertices()), opts_(opts)
    {
        budget_ = {spec.d1, spec.d2};
        if (spec.d1 < 0 || spec.d2 < 0)
            throw ArgumentError("degree bounds must be non-negative");
        std::map<VertexId, int> index;
        for (std::size_t i = 0; i < ids_.size(); ++i)
            index[ids_[i]] = static_cast<int>(i);
        nbrs_.resize(ids_.size());
        for (std::size_t i = 0; i < ids_.size(); ++i)
            for (VertexId w : g.neighbors(ids_[i]))
                nbrs_[i].push_back(index.at(w));
        color_.assign(ids_.size(), -1);
        count_.assign(ids_.size(), {0, 0});
        for (const auto& [v, c] : spec.precoloring) {
            auto it = index.find(v);
            if (it == index.end())
                throw ArgumentError("precoloring names unknown vertex " + std::to_string(v));
            pre_.emplace_back(it->second, static_cast<int>(c));
        }
    }

    /// Calls `visit` for each solution in lexicographic order until it returns false.
    /// Returns true iff the search ran to completion.
    bool run(const std::function<bool(const Coloring&)>& visit)
    {
        start_ = std::chrono::steady_clock::now();
        for (auto [v, c] : pre_)
            queue_.emplace_back(v, c);
        if (!propagate())
            return true;
        return dfs(visit);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool dfs(const std::function<bool(const Coloring&)>& visit)
    {
        if ((++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() - start_ > opts_.timeout)
            throw ResourceLimit("solver timeout after " + std::to_string(opts_.timeout.count()) + " ms");
        int v = -1;
        for (std::size_t i = 0; i < color_.size(); ++i)
            if (color_[i] < 0) {
                v = static_cast<int>(i);
                break;
            }
        if (v < 0) {
            Coloring c;
            for (std::size_t i = 0; i < ids_.size(); ++i)
                c.emplace_hint(c.end(), ids_[i], static_cast<Color>(color_[i]));
            return visit(c);
        }
        for (int c = 0; c < 2; ++c) {
            const std::size_t mark = trail_.size();
            queue_.emplace_back(v, c);
            if (propagate() && !dfs(visit))
                return false;
            undo(mark);
        }
        return true;
    }

    bool propagate()
    {
        bool ok = true;
        while (ok && !queue_.empty()) {
            auto [v, c] = queue_.back();
            queue_.pop_back();
            ok = set(v, c);
        }
        queue_.clear();
        return ok;
    }

    void force_free_neighbors(int v, int c)
    {
        for (int w : nbrs_[v])
            if (color_[w] < 0)
                queue_.emplace_back(w, 1 - c);
    }

    bool set(int v, int c)
    {
        if (color_[v] >= 0)
            return color_[v] == c;
        color_[v] = c;
        trail_.push_back(v);
        for (int w : nbrs_[v])
            ++count_[w][c];
        if (count_[v][c] > budget_[c])
            return false;
        if (count_[v][c] == budget_[c])
            force_free_neighbors(v, c);
        for (int w : nbrs_[v]) {
            if (color_[w] == c) {
                if (count_[w][c] > budget_[c])
                    return false;
                if (count_[w][c] == budget_[c])
                    force_free_neighbors(w, c);
            } else if (color_[w] < 0 && count_[w][c] > budget_[c]) {
                queue_.emplace_back(w, 1 - c);
            }
        }
        return true;
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            int v = trail_.back();
            trail_.pop_back();
            for (int w : nbrs_[v])
                --count_[w][color_[v]];
            color_[v] = -1;
        }
    }

    std::vector<VertexId> ids_;
    SolverOptions opts_;
    std::array<int, 2> budget_{};
    std::vector<std::vector<int>> nbrs_;
    std::vector<int> color_;
    std::vector<std::array<int, 2>> count_;
    std::vector<int> trail_;
    std::vector<std::pair<int, int>> queue_;
    std::vector<std::pair<int, int>> pre_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail

/// Lexicographically first (0 < K, ascending ids) valid coloring extending the
/// precoloring, or unsat after exhausting the search tree.
inline SolveResult solve(const Graph& g, const SolveSpec& spec, const SolverOptions& opts = {})
{
    detail::ColoringSearch search(g, spec, opts);
    SolveResult r;
    search.run([&r](const Coloring& c) {
        r.sat = true;
        r.coloring = c;
        return false;
    });
    r.exhausted = !r.sat;
    r.nodes = search.nodes();
    return r;
}

inline bool is_colorable(const Graph& g, const SolveSpec& spec, const SolverOptions& opts = {})
{
    return solve(g, spec, opts).sat;
}

/// Visits every valid coloring in lexicographic order; stops early when `visit`
/// returns false. Returns true iff every coloring was visited.
inline bool for_each_coloring(const Graph& g, const SolveSpec& spec,
                              const std::function<bool(const Coloring&)>& visit,
                              const SolverOptions& opts = {})
{
    detail::ColoringSearch search(g, spec, opts);
    return search.run(visit);
}

inline constexpr std::size_t kEnumerationThreshold = 30;

inline std::vector<Coloring> enumerate_colorings(const Graph& g, const SolveSpec& spec,
                                                 std::optional<std::size_t> limit = std::nullopt,
                                                 std::size_t threshold = kEnumerationThreshold,
                                                 const SolverOptions& opts = {})
{
    if (!limit && g.num_vertices() > threshold)
        throw ResourceLimit("enumeration of " + std::to_string(g.num_vertices())
                            + " vertices exceeds threshold " + std::to_string(threshold)
                            + " without a limit");
    std::vector<Coloring> out;
    if (limit && *limit == 0)
        return out;
    for_each_coloring(
        g, spec,
        [&](const Coloring& c) {
            out.push_back(c);
            return !limit || out.size() < *limit;
        },
        opts);
    return out;
}

} // namespace impcol
