#pragma once

#include "domgame/errors.hpp"
#include "domgame/family_spec.hpp"
#include "domgame/graph.hpp"
#include "domgame/hamiltonian.hpp"
#include "domgame/oracle.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace domgame {

/**
 * A generated family member with the named vertices its constructions refer to.
 *
 * Labelling conventions:
 *  - path / cycle: 0..n-1 in order.
 *  - tadpole(m, n): cycle 0..m-1, joint m-1, tail m..m+n-1.
 *  - two-tailed-tadpole(m, n, k): id i is v_{i+1} of the path v_1..v_{n+m+k}; the extra edge is v_{n+1} v_{n+m}.
 *  - hatted-cycle(n): cycle 0..n-1, hat x = n joined to y = 1 and y' = n-1, x' = 0.
 *  - broken-ladder(k): rails 0-1-2-3 and 7-6-5-4, rungs (0,7) (1,6) (2,5) (3,4), path 7-8-...-(7+4k)-0.
 *  - cycle-with-chord(n, i): cycle 0..n-1, chord (0, i-1).
 *  - family-fx: X on 0..|X|-1, path y = |X| .. y' = |X|+n-1.
 *  - halin: breadth-first, children of a vertex consecutive; leaves joined in that order.
 *  - r-graph / r-prime-11: path order.
 *  - prime-path(n): P_{n+1} with vertex 0 dominated; double-prime-path(n): P_{n+2} with 0 and n+1 dominated.
 */
struct LabeledGraph
{
    FamilySpec spec;
    Graph graph;
    VertexSet dominated;
    std::map<std::string, int> labels;
    /// Halin only: V_i = vertices at distance i from the root.
    std::vector<VertexSet> levels;
    /// A Hamiltonian path known from the construction, empty if none is recorded.
    std::vector<int> hamiltonian_path;

    auto partial() const -> PartiallyDominatedGraph { return {graph, dominated}; }
    auto label(const std::string & name) const -> int { return labels.at(name); }
};

namespace detail {

inline auto require(bool ok, const std::string & what) -> void
{
    if (!ok)
        throw InvalidArgument(what);
}

inline auto path_edges(int first, int last, std::vector<Edge> & edges) -> void
{
    for (int v = first; v < last; ++v)
        edges.emplace_back(v, v + 1);
}

inline auto identity_order(int n) -> std::vector<int>
{
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

inline auto halin_level_sizes(const family::Halin & f) -> std::vector<int>
{
    std::vector<int> sizes{1};
    for (int d : f.degrees) {
        if (static_cast<long long>(sizes.back()) * d > kMaxVertices)
            throw CapacityExceeded("halin graph exceeds capacity " + std::to_string(kMaxVertices));
        sizes.push_back(sizes.back() * d);
    }
    return sizes;
}

inline auto build_halin(const family::Halin & f, LabeledGraph & out) -> void
{
    require(f.k >= 1, "halin requires k >= 1");
    require(static_cast<int>(f.degrees.size()) == f.k, "halin requires exactly k degrees d_0..d_{k-1}");
    require(f.degrees[0] >= 3, "halin requires d_0 >= 3");
    for (int i = 1; i < f.k; ++i)
        require(f.degrees[i] >= 2, "halin requires d_i >= 2 for i >= 1");

    auto sizes = halin_level_sizes(f);
    int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (total > kMaxVertices)
        throw CapacityExceeded("halin graph of order " + std::to_string(total) + " exceeds capacity");

    std::vector<int> offset(sizes.size(), 0);
    for (std::size_t i = 1; i < sizes.size(); ++i)
        offset[i] = offset[i - 1] + sizes[i - 1];

    std::vector<Edge> edges;
    for (int level = 0; level < f.k; ++level) {
        const int d = f.degrees[level];
        for (int j = 0; j < sizes[level]; ++j)
            for (int c = 0; c < d; ++c)
                edges.emplace_back(offset[level] + j, offset[level + 1] + j * d + c);
    }
    const int leaves = sizes[f.k];
    const int first_leaf = offset[f.k];
    for (int j = 0; j < leaves; ++j)
        edges.emplace_back(first_leaf + j, first_leaf + (j + 1) % leaves);

    out.graph = Graph::from_edges(total, edges);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        VertexSet level;
        for (int j = 0; j < sizes[i]; ++j)
            level.insert(offset[i] + j);
        out.levels.push_back(level);
    }
    out.labels["root"] = 0;
}

inline auto check_generated(const LabeledGraph & lg, int expected_order) -> void
{
    const auto & g = lg.graph;
    if (g.order() != expected_order)
        throw std::logic_error(describe(lg.spec) + ": generated order " + std::to_string(g.order()) +
                               " differs from the expected " + std::to_string(expected_order));
    if (auto err = g.validation_error(); !err.empty())
        throw std::logic_error(describe(lg.spec) + ": " + err);
    if (!lg.dominated.subset_of(g.all()))
        throw std::logic_error(describe(lg.spec) + ": dominated set outside the graph");
    for (const auto & [name, v] : lg.labels)
        if (v < 0 || v >= g.order())
            throw std::logic_error(describe(lg.spec) + ": label " + name + " is not a vertex");
    if (!lg.hamiltonian_path.empty() && !is_hamiltonian_path(g, lg.hamiltonian_path))
        throw std::logic_error(describe(lg.spec) + ": recorded Hamiltonian path is invalid");
}

} // namespace detail

/// Builds and validates one family member. Parameter violations throw InvalidArgument.
inline auto generate(const FamilySpec & spec) -> LabeledGraph
{
    using namespace family;
    using detail::require;
    LabeledGraph out;
    out.spec = spec;
    std::vector<Edge> edges;
    int order = 0;

    std::visit(
        domgame::detail::Overload{
            [&](const Path & f) {
                require(f.n >= 1, "path requires n >= 1");
                order = f.n;
                detail::path_edges(0, f.n - 1, edges);
                out.hamiltonian_path = detail::identity_order(order);
            },
            [&](const Cycle & f) {
                require(f.n >= 3, "cycle requires n >= 3");
                order = f.n;
                detail::path_edges(0, f.n - 1, edges);
                edges.emplace_back(0, f.n - 1);
                out.hamiltonian_path = detail::identity_order(order);
            },
            [&](const Tadpole & f) {
                require(f.m >= 3 && f.n >= 1, "tadpole requires m >= 3 and n >= 1");
                order = f.m + f.n;
                detail::path_edges(0, order - 1, edges);
                edges.emplace_back(0, f.m - 1);
                out.labels["joint"] = f.m - 1;
                out.labels["tail_end"] = order - 1;
                out.hamiltonian_path = detail::identity_order(order);
            },
            [&](const TwoTailedTadpole & f) {
                require(f.m >= 3 && f.n >= 1 && f.k >= 1, "two-tailed-tadpole requires m >= 3 and n, k >= 1");
                order = f.n + f.m + f.k;
                detail::path_edges(0, order - 1, edges);
                edges.emplace_back(f.n, f.n + f.m - 1);
                out.labels["cycle_first"] = f.n;
                out.labels["cycle_last"] = f.n + f.m - 1;
                out.hamiltonian_path = detail::identity_order(order);
            },
            [&](const HattedCycle & f) {
                require(f.n >= 4, "hatted-cycle requires n >= 4");
                order = f.n + 1;
                detail::path_edges(0, f.n - 1, edges);
                edges.emplace_back(0, f.n - 1);
                edges.emplace_back(1, f.n);
                edges.emplace_back(f.n - 1, f.n);
                out.labels = {{"x", f.n}, {"x'", 0}, {"y", 1}, {"y'", f.n - 1}};
                out.hamiltonian_path.push_back(f.n);
                for (int v = 1; v < f.n; ++v)
                    out.hamiltonian_path.push_back(v);
                out.hamiltonian_path.push_back(0);
            },
            [&](const BrokenLadder & f) {
                require(f.k >= 0, "broken-ladder requires k >= 0");
                order = 4 * f.k + 8;
                detail::path_edges(0, 7, edges);
                edges.insert(edges.end(), {{0, 7}, {1, 6}, {2, 5}});
                if (f.k > 0) {
                    detail::path_edges(7, 7 + 4 * f.k, edges);
                    edges.emplace_back(0, 7 + 4 * f.k);
                }
                out.labels = {{"a0", 0}, {"b0", 7}, {"a3", 3}, {"b3", 4}};
                out.hamiltonian_path = detail::identity_order(order);
            },
            [&](const CycleWithChord & f) {
                require(f.n >= 4 && f.i >= 3 && f.i <= f.n - 1,
                        "cycle-with-chord requires 3 <= i <= n-1 (chord v_1 v_i between nonadjacent vertices)");
                order = f.n;
                detail::path_edges(0, f.n - 1, edges);
                edges.emplace_back(0, f.n - 1);
                edges.emplace_back(0, f.i - 1);
                out.labels = {{"v1", 0}, {"vi", f.i - 1}};
                out.hamiltonian_path = detail::identity_order(order);
            },
            [&](const FamilyFX & f) {
                require(f.n >= 3, "family-fx requires a path of order n >= 3");
                require(f.x.order() >= 1, "family-fx requires a non-empty X");
                require(f.w.subset_of(f.x.all()), "family-fx: W must be a subset of V(X)");
                auto ham = has_hamiltonian_path(f.x);
                require(ham.exists, "family-fx: X is not traceable");
                require(!(f.w & ham.endpoints).empty(),
                        "family-fx: W contains no end-vertex of a Hamiltonian path of X");
                const int nx = f.x.order();
                order = nx + f.n;
                edges = f.x.edges();
                detail::path_edges(nx, order - 1, edges);
                for (int v = 0; v < nx; ++v)
                    edges.emplace_back(v, nx);
                f.w.for_each([&](int v) { edges.emplace_back(v, order - 1); });
                out.labels = {{"y", nx}, {"y'", order - 1}};
            },
            [&](const Halin & f) {
                detail::build_halin(f, out);
                order = out.graph.order();
            },
            [&](const RGraph & f) {
                require(f.n >= 2, "r-graph requires n >= 2");
                order = 4 * f.n + 3;
                detail::path_edges(0, order - 1, edges);
                edges.insert(edges.end(), {{0, 4}, {5, 8}, {1, 7}});
                out.hamiltonian_path = detail::identity_order(order);
            },
            [&](const RPrime11 &) {
                order = 11;
                detail::path_edges(0, 10, edges);
                edges.insert(edges.end(), {{0, 4}, {5, 8}, {2, 7}});
                out.hamiltonian_path = detail::identity_order(order);
            },
            [&](const PrimePath & f) {
                require(f.n >= 0, "prime-path requires n >= 0");
                order = f.n + 1;
                detail::path_edges(0, order - 1, edges);
                out.dominated = VertexSet::singleton(0);
                out.labels["u"] = 0;
                out.hamiltonian_path = detail::identity_order(order);
            },
            [&](const DoublePrimePath & f) {
                require(f.n >= 0, "double-prime-path requires n >= 0");
                order = f.n + 2;
                detail::path_edges(0, order - 1, edges);
                out.dominated = VertexSet{0, order - 1};
                out.labels = {{"u", 0}, {"v", order - 1}};
                out.hamiltonian_path = detail::identity_order(order);
            },
        },
        spec);

    if (!std::holds_alternative<Halin>(spec)) {
        if (order > kMaxVertices)
            throw CapacityExceeded(describe(spec) + ": order " + std::to_string(order) + " exceeds capacity");
        out.graph = Graph::from_edges(order, edges);
    }
    detail::check_generated(out, order);

    // Family-specific structure checks.
    if (auto * t = std::get_if<Tadpole>(&spec); t && out.graph.degree(out.label("joint")) != 3)
        throw std::logic_error("tadpole joint vertex does not have degree 3");
    if (auto * h = std::get_if<Halin>(&spec)) {
        for (int i = 0; i + 1 < static_cast<int>(out.levels.size()); ++i)
            if (out.levels[i + 1].size() != out.levels[i].size() * h->degrees[i])
                throw std::logic_error("halin level sizes do not multiply by d_i");
        out.levels.back().for_each([&](int v) {
            if (out.graph.degree(v) != 3)
                throw std::logic_error("halin leaf without degree 3");
        });
    }
    return out;
}

/**
 * The dominating set built level by level for H(k; d_0..d_{k-1}) with every d_i >= 3:
 * V_0 plus V_2, V_5, ... when k = 0 mod 3; V_0 plus V_3, V_6, ... when k = 1 mod 3;
 * V_1, V_4, ... when k = 2 mod 3.
 */
inline auto halin_dominating_set(int k, const std::vector<int> & degrees) -> VertexSet
{
    if (k < 1 || static_cast<int>(degrees.size()) != k)
        throw InvalidArgument("halin_dominating_set requires k >= 1 and k degrees");
    for (int d : degrees)
        if (d < 3)
            throw InvalidArgument("halin_dominating_set requires every d_i >= 3");
    auto lg = generate(family::Halin{k, degrees});

    std::vector<int> chosen;
    switch (k % 3) {
    case 0:
        chosen.push_back(0);
        for (int i = 1; i <= k / 3; ++i)
            chosen.push_back(3 * i - 1);
        break;
    case 1:
        chosen.push_back(0);
        for (int i = 1; i <= (k - 1) / 3; ++i)
            chosen.push_back(3 * i);
        break;
    default:
        for (int i = 1; i <= (k + 1) / 3; ++i)
            chosen.push_back(3 * i - 2);
        break;
    }
    VertexSet d;
    for (int level : chosen)
        d |= lg.levels.at(level);
    if (!lg.graph.dominates(d))
        throw std::logic_error("halin level set fails to dominate H");
    return d;
}

/// Predicted gamma_g of the hatted cycle on C_n: the value of C_n itself.
inline auto hatted_cycle_equivalent_cycle_value(int n) -> int
{
    if (n < 4)
        throw InvalidArgument("hatted cycle requires n >= 4");
    return oracle::path_cycle_gamma_g(n, oracle::Shape::Cycle);
}

} // namespace domgame
