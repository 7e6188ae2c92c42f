#pragma once

#include "domgame/errors.hpp"
#include "domgame/family_spec.hpp"
#include "domgame/families.hpp"
#include "domgame/graph.hpp"
#include "domgame/hamiltonian.hpp"
#include "domgame/oracle.hpp"
#include "domgame/solver.hpp"

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

namespace domgame {

namespace unicyclic {

struct Cycle { int m; auto operator==(const Cycle &) const -> bool = default; };
struct Tadpole { int m; int n; auto operator==(const Tadpole &) const -> bool = default; };
/// Tails reported with n >= k.
struct TwoTailedTadpole { int m; int n; int k; auto operator==(const TwoTailedTadpole &) const -> bool = default; };
struct NotTraceable { auto operator==(const NotTraceable &) const -> bool = default; };
struct NotUnicyclic { auto operator==(const NotUnicyclic &) const -> bool = default; };

} // namespace unicyclic

using UnicyclicClass = std::variant<unicyclic::Cycle, unicyclic::Tadpole, unicyclic::TwoTailedTadpole,
                                    unicyclic::NotTraceable, unicyclic::NotUnicyclic>;

inline auto to_string(const UnicyclicClass & c) -> std::string
{
    return std::visit(detail::Overload{
                          [](const unicyclic::Cycle & x) { return "cycle m=" + std::to_string(x.m); },
                          [](const unicyclic::Tadpole & x) {
                              return "tadpole m=" + std::to_string(x.m) + " n=" + std::to_string(x.n);
                          },
                          [](const unicyclic::TwoTailedTadpole & x) {
                              return "two-tailed-tadpole m=" + std::to_string(x.m) + " n=" + std::to_string(x.n) +
                                     " k=" + std::to_string(x.k);
                          },
                          [](const unicyclic::NotTraceable &) { return std::string("not-traceable"); },
                          [](const unicyclic::NotUnicyclic &) { return std::string("not-unicyclic"); },
                      },
                      c);
}

/**
 * Classifies a unicyclic graph as a cycle, tadpole, two-tailed tadpole or
 * non-traceable. The cycle is found by repeatedly stripping leaves; each
 * remaining attachment must be a bare path.
 */
inline auto classify_unicyclic(const Graph & g) -> UnicyclicClass
{
    const int n = g.order();
    if (n < 3 || !g.connected() || g.edge_count() != n)
        return unicyclic::NotUnicyclic{};

    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v)
        degree[v] = g.degree(v);
    VertexSet core = g.all();
    bool stripped = true;
    while (stripped) {
        stripped = false;
        for (int v = 0; v < n; ++v) {
            if (core.contains(v) && degree[v] <= 1) {
                core.erase(v);
                (g.open_nbhd(v) & core).for_each([&](int u) { --degree[u]; });
                stripped = true;
            }
        }
    }
    const int m = core.size();

    // Attachment points: cycle vertices with neighbours off the cycle.
    std::vector<int> roots;
    std::vector<int> tails;
    bool paths_only = true;
    core.for_each([&](int c) {
        auto off = g.open_nbhd(c) - core;
        if (off.empty())
            return;
        if (off.size() > 1) {
            paths_only = false;
            return;
        }
        // Walk the pendant tree; it must be a path.
        int prev = c;
        int cur = off.lowest();
        int length = 1;
        while (true) {
            auto next = g.open_nbhd(cur) - VertexSet::singleton(prev);
            if (next.empty())
                break;
            if (next.size() > 1) {
                paths_only = false;
                return;
            }
            prev = cur;
            cur = next.lowest();
            ++length;
        }
        roots.push_back(c);
        tails.push_back(length);
    });

    if (!paths_only)
        return unicyclic::NotTraceable{};
    if (roots.empty())
        return unicyclic::Cycle{m};
    if (roots.size() == 1)
        return unicyclic::Tadpole{m, tails[0]};
    if (roots.size() == 2 && g.adjacent(roots[0], roots[1]))
        return unicyclic::TwoTailedTadpole{m, std::max(tails[0], tails[1]), std::min(tails[0], tails[1])};
    return unicyclic::NotTraceable{};
}

struct ConjectureRow
{
    std::string family;
    std::string params;
    int n = 0;
    int gamma_g = 0;
    int bound = 0;
    bool holds = false;
    bool is_half_graph = false;

    auto operator==(const ConjectureRow &) const -> bool = default;
};

namespace detail {

inline auto conjecture_row(const Graph & g, const SolverConfig & cfg, std::string family, std::string params)
    -> ConjectureRow
{
    ConjectureRow row;
    row.family = std::move(family);
    row.params = std::move(params);
    row.n = g.order();
    row.gamma_g = game_value(g, {}, Turn::Dominator, cfg).moves;
    row.bound = oracle::ceil_half(row.n);
    row.holds = row.gamma_g <= row.bound;
    row.is_half_graph = row.gamma_g == row.bound;
    return row;
}

} // namespace detail

/// Solves the D-game on a traceable graph and compares it with ceil(n/2).
inline auto check_half_conjecture(const Graph & g, const SolverConfig & cfg = {}, std::string family = "graph",
                                  std::string params = {}) -> ConjectureRow
{
    if (g.order() > cfg.vertex_cap)
        throw CapacityExceeded("graph order " + std::to_string(g.order()) + " exceeds solver vertex cap " +
                               std::to_string(cfg.vertex_cap));
    if (!has_hamiltonian_path(g).exists)
        throw InvalidArgument("graph is not traceable");
    return detail::conjecture_row(g, cfg, std::move(family), std::move(params));
}

/// As above, trusting a Hamiltonian path recorded by the generator when there is one.
inline auto check_half_conjecture(const LabeledGraph & lg, const SolverConfig & cfg = {}) -> ConjectureRow
{
    if (lg.hamiltonian_path.empty())
        return check_half_conjecture(lg.graph, cfg, family_name(lg.spec), family_params(lg.spec));
    if (!is_hamiltonian_path(lg.graph, lg.hamiltonian_path))
        throw InvalidArgument("recorded Hamiltonian path is invalid");
    if (lg.graph.order() > cfg.vertex_cap)
        throw CapacityExceeded("graph order " + std::to_string(lg.graph.order()) + " exceeds solver vertex cap " +
                               std::to_string(cfg.vertex_cap));
    return detail::conjecture_row(lg.graph, cfg, family_name(lg.spec), family_params(lg.spec));
}

} // namespace domgame
