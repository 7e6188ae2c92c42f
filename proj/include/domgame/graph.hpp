#pragma once

#include "domgame/errors.hpp"
#include "domgame/vertex_set.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace domgame {

using Edge = std::pair<int, int>;

/**
 * Simple undirected graph stored as closed-neighborhood rows.
 *
 * Row v holds N[v] = {v} plus the neighbors of v. Values are immutable once
 * built; every mutating operation returns a fresh Graph.
 */
class Graph
{
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate pairs collapse to one edge.
    static auto from_edges(int n, const std::vector<Edge> & edges) -> Graph
    {
        if (n < 0)
            throw InvalidGraph("negative vertex count");
        if (n > kMaxVertices)
            throw CapacityExceeded("graph order " + std::to_string(n) + " exceeds capacity " +
                                   std::to_string(kMaxVertices));
        Graph g;
        g.n_ = n;
        g.rows_.resize(n);
        for (int v = 0; v < n; ++v)
            g.rows_[v] = VertexSet::singleton(v);
        for (auto [u, v] : edges) {
            g.check_endpoints(u, v);
            g.rows_[u].insert(v);
            g.rows_[v].insert(u);
        }
        return g;
    }

    auto order() const -> int { return n_; }

    /// N[v].
    auto closed_nbhd(int v) const -> VertexSet { return rows_.at(v); }

    /// N(v) = N[v] - {v}.
    auto open_nbhd(int v) const -> VertexSet { return rows_.at(v) - VertexSet::singleton(v); }

    auto degree(int v) const -> int { return rows_.at(v).size() - 1; }

    auto all() const -> VertexSet { return VertexSet::first(n_); }

    auto adjacent(int u, int v) const -> bool { return u != v && rows_.at(u).contains(v); }

    auto edge_count() const -> int
    {
        int twice = 0;
        for (auto row : rows_)
            twice += row.size() - 1;
        return twice / 2;
    }

    /// Edges (u, v) with u < v in lexicographic order.
    auto edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            (rows_[u] - VertexSet::first(u + 1)).for_each([&](int v) { out.emplace_back(u, v); });
        return out;
    }

    /// Whether `s` dominates every vertex.
    auto dominates(VertexSet s) const -> bool
    {
        VertexSet covered;
        s.for_each([&](int v) { covered |= rows_.at(v); });
        return covered == all();
    }

    /// Union of N[v] over v in s.
    auto closed_nbhd(VertexSet s) const -> VertexSet
    {
        VertexSet covered;
        s.for_each([&](int v) { covered |= rows_.at(v); });
        return covered;
    }

    /// Subgraph induced by the first `count` vertices.
    auto induced_prefix(int count) const -> Graph
    {
        if (count < 0 || count > n_)
            throw InvalidArgument("induced_prefix: count out of range");
        Graph g;
        g.n_ = count;
        auto keep = VertexSet::first(count);
        for (int v = 0; v < count; ++v)
            g.rows_.push_back(rows_[v] & keep);
        return g;
    }

    auto component_count() const -> int
    {
        VertexSet seen;
        int count = 0;
        for (int v = 0; v < n_; ++v) {
            if (seen.contains(v))
                continue;
            ++count;
            VertexSet frontier = VertexSet::singleton(v);
            while (!frontier.empty()) {
                seen |= frontier;
                frontier = closed_nbhd(frontier) - seen;
            }
        }
        return count;
    }

    auto connected() const -> bool { return n_ <= 1 || component_count() == 1; }

    /// Checks the diagonal bit, symmetry and row range; returns a description or "" when valid.
    auto validation_error() const -> std::string
    {
        if (static_cast<int>(rows_.size()) != n_)
            return "row count differs from order";
        for (int v = 0; v < n_; ++v) {
            if (!rows_[v].contains(v))
                return "vertex " + std::to_string(v) + " missing from its closed neighborhood";
            if (!rows_[v].subset_of(all()))
                return "row " + std::to_string(v) + " has bits beyond the vertex count";
            bool symmetric = true;
            rows_[v].for_each([&](int u) { symmetric = symmetric && rows_[u].contains(v); });
            if (!symmetric)
                return "adjacency of vertex " + std::to_string(v) + " is not symmetric";
        }
        return {};
    }

    auto operator==(const Graph &) const -> bool = default;

private:
    auto check_endpoints(int u, int v) const -> void
    {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw InvalidGraph("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") has an endpoint outside [0, " + std::to_string(n_) + ")");
        if (u == v)
            throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    }

    int n_ = 0;
    std::vector<VertexSet> rows_;
};

/// A graph together with the set of vertices already declared dominated.
struct PartiallyDominatedGraph
{
    Graph graph;
    VertexSet dominated;

    PartiallyDominatedGraph() = default;

    PartiallyDominatedGraph(Graph g, VertexSet s) : graph(std::move(g)), dominated(s)
    {
        if (!dominated.subset_of(graph.all()))
            throw InvalidGraph("dominated set contains vertices outside the graph");
    }

    auto operator==(const PartiallyDominatedGraph &) const -> bool = default;
};

inline auto make_graph(int n, const std::vector<Edge> & edges) -> Graph
{
    return Graph::from_edges(n, edges);
}

/// Returns `g` with `pairs` added. Every pair must be a non-edge of `g`.
inline auto add_edges(const Graph & g, const std::vector<Edge> & pairs) -> Graph
{
    auto edges = g.edges();
    auto seen = g;
    for (auto [u, v] : pairs) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
            throw InvalidGraph("pair (" + std::to_string(u) + "," + std::to_string(v) + ") is not a valid vertex pair");
        if (seen.adjacent(u, v))
            throw InvalidGraph("pair (" + std::to_string(u) + "," + std::to_string(v) + ") is already an edge");
        edges.emplace_back(u, v);
        seen = Graph::from_edges(g.order(), edges);
    }
    return seen;
}

/// Disjoint union; the vertices of `b` are renumbered after those of `a`.
inline auto disjoint_union(const PartiallyDominatedGraph & a, const PartiallyDominatedGraph & b)
    -> PartiallyDominatedGraph
{
    const int na = a.graph.order();
    const int total = na + b.graph.order();
    if (total > kMaxVertices)
        throw CapacityExceeded("disjoint union of order " + std::to_string(total) + " exceeds capacity " +
                               std::to_string(kMaxVertices));
    auto edges = a.graph.edges();
    for (auto [u, v] : b.graph.edges())
        edges.emplace_back(u + na, v + na);
    return {Graph::from_edges(total, edges), a.dominated | b.dominated.shifted(na)};
}

/// All unordered non-adjacent pairs (u, v), u < v, in lexicographic order.
inline auto non_edges(const Graph & g) -> std::vector<Edge>
{
    std::vector<Edge> out;
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        (g.all() - VertexSet::first(u + 1) - g.closed_nbhd(u)).for_each([&](int v) { out.emplace_back(u, v); });
    return out;
}

} // namespace domgame
