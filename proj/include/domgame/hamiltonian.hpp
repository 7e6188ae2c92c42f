#pragma once

#include "domgame/errors.hpp"
#include "domgame/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace domgame {

struct HamiltonianInfo
{
    bool exists = false;
    /// Vertices at which some Hamiltonian path ends.
    VertexSet endpoints;
};

inline constexpr int kHamiltonianCap = 24;

/**
 * Subset DP: ends[S] is the set of vertices v such that some path visits
 * exactly S and finishes at v. The endpoint set is ends[V].
 */
inline auto has_hamiltonian_path(const Graph & g, int cap = kHamiltonianCap) -> HamiltonianInfo
{
    const int n = g.order();
    if (n > cap || n > 30)
        throw CapacityExceeded("hamiltonian path search limited to " + std::to_string(cap) + " vertices, got " +
                               std::to_string(n));
    if (n == 0)
        return {};
    std::vector<std::uint32_t> adj(n);
    for (int v = 0; v < n; ++v)
        adj[v] = static_cast<std::uint32_t>(g.open_nbhd(v).bits());

    const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1);
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v)
        ends[std::size_t{1} << v] = 1U << v;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::uint32_t at = ends[mask];
        for (; at != 0; at &= at - 1) {
            int v = std::countr_zero(at);
            for (std::uint32_t next = adj[v] & ~mask; next != 0; next &= next - 1) {
                std::uint32_t u = next & (~next + 1);
                ends[mask | u] |= u;
            }
        }
    }
    HamiltonianInfo info;
    info.endpoints = VertexSet(ends[full]);
    info.exists = !info.endpoints.empty();
    return info;
}

/// True when `order` visits every vertex once along edges of `g`.
inline auto is_hamiltonian_path(const Graph & g, const std::vector<int> & order) -> bool
{
    if (static_cast<int>(order.size()) != g.order())
        return false;
    VertexSet seen;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        if (v < 0 || v >= g.order() || seen.contains(v))
            return false;
        seen.insert(v);
        if (i > 0 && !g.adjacent(order[i - 1], v))
            return false;
    }
    return true;
}

} // namespace domgame
