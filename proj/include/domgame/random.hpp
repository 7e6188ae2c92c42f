#pragma once

#include "domgame/graph.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace domgame {

/**
 * Seeded generator with platform-independent draws.
 *
 * std::uniform_int_distribution is implementation-defined, so bounded draws are
 * done here by rejection on the raw 64-bit engine output. Reports built from a
 * given seed are then identical across standard libraries.
 */
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound).
    auto below(std::uint64_t bound) -> std::uint64_t
    {
        if (bound <= 1)
            return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform integer in [lo, hi].
    auto between(int lo, int hi) -> int { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    /// True with probability num/den.
    auto chance(int num, int den) -> bool { return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num); }

    template <typename T>
    auto shuffle(std::vector<T> & v) -> void
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

    auto subset(VertexSet of, int num = 1, int den = 2) -> VertexSet
    {
        VertexSet out;
        of.for_each([&](int v) {
            if (chance(num, den))
                out.insert(v);
        });
        return out;
    }

private:
    std::mt19937_64 engine_;
};

/// G(n, p) with p = num/den.
inline auto random_graph(Rng & rng, int n, int num, int den) -> Graph
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(num, den))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

/// Random spanning tree plus G(n, p) extra edges: always connected.
inline auto random_connected_graph(Rng & rng, int n, int num, int den) -> Graph
{
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(num, den))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

/// A random Hamiltonian path plus G(n, p) extra edges: always traceable.
inline auto random_traceable_graph(Rng & rng, int n, int num, int den) -> Graph
{
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(order[i], order[i + 1]);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(num, den))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

} // namespace domgame
