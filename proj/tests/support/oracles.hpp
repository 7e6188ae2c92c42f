#pragma once

// Slow reference implementations sharing no code with the library beyond Graph construction.

#include "domgame/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracles {

struct Adjacency
{
    int n = 0;
    std::vector<std::vector<bool>> closed;

    explicit Adjacency(const domgame::Graph & g) : n(g.order()), closed(n, std::vector<bool>(n, false))
    {
        for (int v = 0; v < n; ++v)
            closed[v][v] = true;
        for (auto [u, v] : g.edges())
            closed[u][v] = closed[v][u] = true;
    }
};

inline auto to_bits(const std::vector<bool> & s) -> std::uint64_t
{
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i])
            b |= std::uint64_t{1} << i;
    return b;
}

/// Plain minimax over every legal move, memoized on (state, player to move).
class Minimax
{
public:
    explicit Minimax(const domgame::Graph & g) : adj_(g) {}

    auto value(std::vector<bool> dominated, bool dominator_to_move) -> int
    {
        dominated.resize(adj_.n, false);
        return play(dominated, dominator_to_move);
    }

private:
    auto play(const std::vector<bool> & s, bool dom) -> int
    {
        if (std::all_of(s.begin(), s.end(), [](bool b) { return b; }))
            return 0;
        const auto key = std::make_pair(to_bits(s), dom);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        int best = dom ? 1 << 30 : -1;
        for (int v = 0; v < adj_.n; ++v) {
            std::vector<bool> next = s;
            bool gained = false;
            for (int u = 0; u < adj_.n; ++u)
                if (adj_.closed[v][u] && !next[u]) {
                    next[u] = true;
                    gained = true;
                }
            if (!gained)
                continue;
            const int r = 1 + play(next, !dom);
            best = dom ? std::min(best, r) : std::max(best, r);
        }
        memo_[key] = best;
        return best;
    }

    Adjacency adj_;
    std::map<std::pair<std::uint64_t, bool>, int> memo_;
};

inline auto game_value(const domgame::Graph & g, std::vector<int> dominated = {}, bool dominator = true) -> int
{
    std::vector<bool> s(g.order(), false);
    for (int v : dominated)
        s[v] = true;
    return Minimax(g).value(s, dominator);
}

/// Smallest dominating set size by checking subsets of growing size.
inline auto domination_number(const domgame::Graph & g) -> int
{
    Adjacency adj(g);
    const int n = adj.n;
    for (int size = 0; size <= n; ++size) {
        std::vector<bool> pick(n, false);
        std::fill(pick.end() - size, pick.end(), true);
        do {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u) {
                bool covered = false;
                for (int v = 0; v < n && !covered; ++v)
                    covered = pick[v] && adj.closed[v][u];
                ok = covered;
            }
            if (ok)
                return size;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return n;
}

/// Vertices ending some Hamiltonian path, by trying every permutation.
inline auto hamiltonian_endpoints(const domgame::Graph & g) -> std::vector<int>
{
    Adjacency adj(g);
    std::vector<int> order(adj.n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<bool> end(adj.n, false);
    if (adj.n == 0)
        return {};
    do {
        bool ok = true;
        for (int i = 0; i + 1 < adj.n && ok; ++i)
            ok = adj.closed[order[i]][order[i + 1]];
        if (ok)
            end[order.front()] = end[order.back()] = true;
    } while (std::next_permutation(order.begin(), order.end()));
    std::vector<int> out;
    for (int v = 0; v < adj.n; ++v)
        if (end[v])
            out.push_back(v);
    return out;
}

} // namespace oracles
