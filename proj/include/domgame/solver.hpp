#pragma once

#include "domgame/errors.hpp"
#include "domgame/graph.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace domgame {

enum class Turn { Dominator, Staller };

constexpr auto other(Turn t) -> Turn { return t == Turn::Dominator ? Turn::Staller : Turn::Dominator; }

inline auto to_string(Turn t) -> std::string { return t == Turn::Dominator ? "dominator" : "staller"; }

/// Number of moves played under optimal play. Zero means the game was already over.
struct GameValue
{
    int moves = 0;

    constexpr auto operator<=>(const GameValue &) const = default;
};

struct SolverConfig
{
    /// Drop moves dominated under the Continuation Principle.
    bool pruning = true;
    /// Maximum number of memo entries before the solve aborts.
    std::size_t memo_limit = std::size_t{1} << 28;
    /// Graphs of larger order are refused.
    int vertex_cap = 26;

    auto validate() const -> void
    {
        if (memo_limit == 0)
            throw InvalidArgument("memo_limit must be positive");
        if (vertex_cap < 1 || vertex_cap > kMaxVertices)
            throw InvalidArgument("vertex_cap must lie in [1, " + std::to_string(kMaxVertices) + "]");
    }
};

struct SolverStats
{
    std::size_t states = 0;     ///< memo entries stored
    std::size_t expansions = 0; ///< successor generations
};

/// Vertices whose play would newly dominate at least one vertex.
inline auto legal_moves(const Graph & g, VertexSet dominated) -> VertexSet
{
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (!g.closed_nbhd(v).subset_of(dominated))
            out.insert(v);
    return out;
}

/**
 * Memoized exact solver for the domination game on one fixed graph.
 *
 * The memo is keyed by (dominated set, player to move). Orders up to
 * `kDenseOrder` use a flat table of 2^n bytes per turn, larger orders a hash
 * map. A solver owns its tables and must not be shared between threads.
 */
class GameSolver
{
public:
    static constexpr int kDenseOrder = 24;

    explicit GameSolver(Graph g, SolverConfig cfg = {}) : graph_(std::move(g)), cfg_(cfg)
    {
        cfg_.validate();
        const int n = graph_.order();
        if (n > cfg_.vertex_cap)
            throw CapacityExceeded("graph order " + std::to_string(n) + " exceeds solver vertex cap " +
                                   std::to_string(cfg_.vertex_cap));
        full_ = graph_.all().bits();
        int max_cover = 1;
        for (int v = 0; v < n; ++v) {
            rows_[v] = graph_.closed_nbhd(v).bits();
            max_cover = std::max(max_cover, graph_.closed_nbhd(v).size());
        }
        max_cover_ = max_cover;
        if (n <= kDenseOrder)
            for (auto & table : dense_)
                table.assign(std::size_t{1} << n, 0);
    }

    auto graph() const -> const Graph & { return graph_; }
    auto config() const -> const SolverConfig & { return cfg_; }
    auto stats() const -> const SolverStats & { return stats_; }

    auto value(VertexSet dominated, Turn turn) -> GameValue
    {
        check_state(dominated);
        return GameValue{solve(dominated.bits(), turn)};
    }

    /// Every legal move that attains the optimum for `turn`.
    auto optimal_first_moves(VertexSet dominated, Turn turn) -> VertexSet
    {
        check_state(dominated);
        auto legal = legal_moves(graph_, dominated);
        if (legal.empty())
            throw InvalidArgument("no legal moves: the game is already over");
        const int target = solve(dominated.bits(), turn);
        VertexSet out;
        legal.for_each([&](int v) {
            if (1 + solve(dominated.bits() | rows_[v], other(turn)) == target)
                out.insert(v);
        });
        return out;
    }

    /// 1 + value after `turn` is forced to open on `v`.
    auto value_with_forced_first_move(VertexSet dominated, int v, Turn turn) -> GameValue
    {
        check_state(dominated);
        if (v < 0 || v >= graph_.order() || !legal_moves(graph_, dominated).contains(v))
            throw InvalidArgument("forced move " + std::to_string(v) + " is not legal");
        return GameValue{1 + solve(dominated.bits() | rows_[v], other(turn))};
    }

private:
    using Word = VertexSet::Word;

    auto check_state(VertexSet dominated) const -> void
    {
        if (!dominated.subset_of(graph_.all()))
            throw InvalidArgument("dominated set contains vertices outside the graph");
    }

    auto lower_bound(Word s) const -> int
    {
        const int open = std::popcount(full_ & ~s);
        return (open + max_cover_ - 1) / max_cover_;
    }

    auto lookup(Word s, Turn turn) const -> int
    {
        const int t = static_cast<int>(turn);
        if (graph_.order() <= kDenseOrder)
            return dense_[t][s] - 1;
        auto it = hashed_[t].find(s);
        return it == hashed_[t].end() ? -1 : it->second - 1;
    }

    auto store(Word s, Turn turn, int v) -> void
    {
        if (++stats_.states > cfg_.memo_limit)
            throw SolverAborted("memo limit of " + std::to_string(cfg_.memo_limit) + " entries exceeded");
        const int t = static_cast<int>(turn);
        if (graph_.order() <= kDenseOrder)
            dense_[t][s] = static_cast<std::uint8_t>(v + 1);
        else
            hashed_[t].emplace(s, static_cast<std::uint8_t>(v + 1));
    }

    // Successor states of `s`, deduplicated, optionally pruned and ordered.
    auto successors(Word s, Turn turn, std::array<Word, kMaxVertices> & out) const -> int
    {
        int count = 0;
        for (int v = 0; v < graph_.order(); ++v) {
            Word next = s | rows_[v];
            if (next != s)
                out[count++] = next;
        }
        std::sort(out.begin(), out.begin() + count);
        count = static_cast<int>(std::unique(out.begin(), out.begin() + count) - out.begin());

        if (cfg_.pruning) {
            // Dominator keeps only inclusion-maximal successors, Staller only minimal ones.
            std::array<Word, kMaxVertices> kept{};
            int kept_count = 0;
            for (int i = 0; i < count; ++i) {
                bool dropped = false;
                for (int j = 0; j < count && !dropped; ++j)
                    if (i != j)
                        dropped = turn == Turn::Dominator ? (out[i] & ~out[j]) == 0 : (out[j] & ~out[i]) == 0;
                if (!dropped)
                    kept[kept_count++] = out[i];
            }
            std::copy(kept.begin(), kept.begin() + kept_count, out.begin());
            count = kept_count;
        }

        auto gain = [](Word w) { return std::popcount(w); };
        if (turn == Turn::Dominator)
            std::stable_sort(out.begin(), out.begin() + count, [&](Word a, Word b) { return gain(a) > gain(b); });
        else
            std::stable_sort(out.begin(), out.begin() + count, [&](Word a, Word b) { return gain(a) < gain(b); });
        return count;
    }

    auto solve(Word s, Turn turn) -> int
    {
        if (s == full_)
            return 0;
        if (int cached = lookup(s, turn); cached >= 0)
            return cached;

        ++stats_.expansions;
        std::array<Word, kMaxVertices> next{};
        const int count = successors(s, turn, next);

        int best;
        if (turn == Turn::Dominator) {
            int floor = kMaxVertices;
            for (int i = 0; i < count; ++i)
                floor = std::min(floor, next[i] == full_ ? 0 : lower_bound(next[i]));
            best = kMaxVertices;
            for (int i = 0; i < count && best > floor; ++i)
                best = std::min(best, solve(next[i], Turn::Staller));
        }
        else {
            int ceiling = 0;
            for (int i = 0; i < count; ++i)
                ceiling = std::max(ceiling, std::popcount(full_ & ~next[i]));
            best = -1;
            for (int i = 0; i < count && best < ceiling; ++i)
                best = std::max(best, solve(next[i], Turn::Dominator));
        }
        store(s, turn, best + 1);
        return best + 1;
    }

    Graph graph_;
    SolverConfig cfg_;
    SolverStats stats_;
    Word full_ = 0;
    int max_cover_ = 1;
    std::array<Word, kMaxVertices> rows_{};
    std::array<std::vector<std::uint8_t>, 2> dense_;
    std::array<std::unordered_map<Word, std::uint8_t>, 2> hashed_;
};

inline auto game_value(const Graph & g, VertexSet dominated, Turn turn, const SolverConfig & cfg = {}) -> GameValue
{
    return GameSolver(g, cfg).value(dominated, turn);
}

inline auto game_value(const PartiallyDominatedGraph & pg, Turn turn, const SolverConfig & cfg = {}) -> GameValue
{
    return game_value(pg.graph, pg.dominated, turn, cfg);
}

inline auto optimal_first_moves(const Graph & g, VertexSet dominated, Turn turn, const SolverConfig & cfg = {})
    -> VertexSet
{
    return GameSolver(g, cfg).optimal_first_moves(dominated, turn);
}

inline auto value_with_forced_first_move(const Graph & g, VertexSet dominated, int v, Turn turn,
                                         const SolverConfig & cfg = {}) -> GameValue
{
    return GameSolver(g, cfg).value_with_forced_first_move(dominated, v, turn);
}

/// A smallest dominating set, by branch and bound seeded with a greedy incumbent.
inline auto minimum_dominating_set(const Graph & g, int vertex_cap = 64) -> VertexSet
{
    using Word = VertexSet::Word;
    const int n = g.order();
    if (n > vertex_cap)
        throw CapacityExceeded("graph order " + std::to_string(n) + " exceeds cap " + std::to_string(vertex_cap));
    if (n == 0)
        return {};
    const Word full = g.all().bits();
    std::array<Word, kMaxVertices> rows{};
    for (int v = 0; v < n; ++v)
        rows[v] = g.closed_nbhd(v).bits();

    // Greedy incumbent: repeatedly take the vertex covering the most undominated vertices.
    Word covered = 0;
    Word best_set = 0;
    while (covered != full) {
        int pick = 0;
        int gain = -1;
        for (int v = 0; v < n; ++v) {
            int c = std::popcount(rows[v] & ~covered);
            if (c > gain) {
                gain = c;
                pick = v;
            }
        }
        best_set |= Word{1} << pick;
        covered |= rows[pick];
    }
    int best = std::popcount(best_set);

    auto search = [&](auto && self, Word dominated, Word chosen, int size) -> void {
        if (dominated == full) {
            if (size < best) {
                best = size;
                best_set = chosen;
            }
            return;
        }
        const Word open = full & ~dominated;
        int max_gain = 1;
        for (int v = 0; v < n; ++v)
            max_gain = std::max(max_gain, std::popcount(rows[v] & open));
        const int open_count = std::popcount(open);
        if (size + (open_count + max_gain - 1) / max_gain >= best)
            return;
        // Branch on the undominated vertex with the fewest dominators.
        int target = -1;
        int fewest = kMaxVertices + 1;
        for (Word w = open; w != 0; w &= w - 1) {
            int u = std::countr_zero(w);
            int c = std::popcount(rows[u]);
            if (c < fewest) {
                fewest = c;
                target = u;
            }
        }
        std::array<int, kMaxVertices> choices{};
        int count = 0;
        for (Word w = rows[target]; w != 0; w &= w - 1)
            choices[count++] = std::countr_zero(w);
        std::sort(choices.begin(), choices.begin() + count, [&](int a, int b) {
            return std::popcount(rows[a] & open) > std::popcount(rows[b] & open);
        });
        for (int i = 0; i < count; ++i) {
            int v = choices[i];
            self(self, dominated | rows[v], chosen | (Word{1} << v), size + 1);
        }
    };
    search(search, 0, 0, 0);
    return VertexSet(best_set);
}

inline auto domination_number(const Graph & g, int vertex_cap = 64) -> int
{
    return minimum_dominating_set(g, vertex_cap).size();
}

} // namespace domgame
