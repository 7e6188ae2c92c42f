#pragma once

#include "domgame/errors.hpp"
#include "domgame/family_spec.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

/// Closed-form game values, the quarter-integer path weights and the tadpole case tables.
namespace domgame::oracle {

/// Exact multiple of 1/4.
class QuarterWeight
{
public:
    constexpr QuarterWeight() = default;
    static constexpr auto from_quarters(std::int64_t q) -> QuarterWeight { return QuarterWeight(q); }

    constexpr auto quarters() const -> std::int64_t { return quarters_; }

    constexpr auto operator+(QuarterWeight o) const -> QuarterWeight { return QuarterWeight(quarters_ + o.quarters_); }
    constexpr auto operator+=(QuarterWeight o) -> QuarterWeight & { quarters_ += o.quarters_; return *this; }

    /// Smallest integer not below the value.
    constexpr auto ceil() const -> std::int64_t
    {
        return quarters_ >= 0 ? (quarters_ + 3) / 4 : -((-quarters_) / 4);
    }

    constexpr auto operator<=>(const QuarterWeight &) const = default;

    /// "15/4", "7/2", "3".
    auto to_string() const -> std::string
    {
        std::int64_t num = quarters_;
        std::int64_t den = 4;
        while (den > 1 && num % 2 == 0) {
            num /= 2;
            den /= 2;
        }
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

private:
    constexpr explicit QuarterWeight(std::int64_t q) : quarters_(q) {}
    std::int64_t quarters_ = 0;
};

enum class PieceKind { Prime, DoublePrime };

enum class Shape { Path, Cycle };

constexpr auto ceil_half(int n) -> int { return (n + 1) / 2; }

/// Game domination number of P_n (n >= 1) or C_n (n >= 3).
inline auto path_cycle_gamma_g(int n, Shape shape) -> int
{
    if (n < (shape == Shape::Path ? 1 : 3))
        throw InvalidArgument("order " + std::to_string(n) + " below the minimum for a " +
                              (shape == Shape::Path ? "path" : "cycle"));
    return n % 4 == 3 ? ceil_half(n) - 1 : ceil_half(n);
}

struct PiecePair
{
    int d_game; ///< Dominator starts
    int s_game; ///< Staller starts

    auto operator==(const PiecePair &) const -> bool = default;
};

/// (gamma_g, gamma_g') of P'_n or P''_n; the values coincide for both kinds.
inline auto partial_path_values(int n, PieceKind) -> PiecePair
{
    if (n < 0)
        throw InvalidArgument("piece length must be non-negative");
    const int half = ceil_half(n);
    return {n % 4 == 3 ? half - 1 : half, n % 4 == 2 ? half + 1 : half};
}

/// Weight of P'_n / P''_n: 2q plus 0, 1, 3/2, 7/4 for n = 4q + r, r = 0..3.
inline auto weight(int n) -> QuarterWeight
{
    if (n < 0)
        throw InvalidArgument("piece length must be non-negative");
    constexpr std::array<int, 4> tail = {0, 4, 6, 7};
    return QuarterWeight::from_quarters(8LL * (n / 4) + tail[n % 4]);
}

struct Piece
{
    int length;
    PieceKind kind;
};

/// ceil(sum of weights): bounds gamma_g' of a disjoint union of P'/P'' pieces.
inline auto union_lemma_bound(const std::vector<Piece> & pieces) -> int
{
    QuarterWeight total;
    for (const auto & p : pieces)
        total += weight(p.length);
    return static_cast<int>(total.ceil());
}

/**
 * Constants of one tadpole case row. For n = 4k + x + 1 and m = 4l + y + 3:
 * bound = 2k + 2l + bound, order = 4k + 4l + order, ceil(order / 2) = 2k + 2l + ceiling.
 */
struct TadpoleRow
{
    int bound;
    int order;
    int ceiling;

    auto operator==(const TadpoleRow &) const -> bool = default;
};

inline auto check_residue(int r, const char * name) -> void
{
    if (r < 0 || r > 3)
        throw InvalidArgument(std::string("residue ") + name + "=" + std::to_string(r) + " outside [0, 4)");
}

inline auto tadpole_table_row(int x, int y) -> TadpoleRow
{
    check_residue(x, "x");
    check_residue(y, "y");
    // w(4a + r) = 2a + w(r), so the integer parts leave the ceiling unchanged.
    const int bound = 1 + static_cast<int>((weight(x) + weight(y)).ceil());
    const int order = x + y + 4;
    return {bound, order, ceil_half(order)};
}

/**
 * One row of the two-tailed tadpole check for n = 4n' + x + 1, m = 4m' + y + 2, k = 4k' + z:
 * bound = 1 + ceil(w(4n' + x) + w(4(m' + k') + y + z)) and ceil(n(G) / 2), both as 2k' + 2m' + 2n' + c.
 */
struct TwoTailedRow
{
    int bound;
    int ceiling;
    bool holds;

    auto operator==(const TwoTailedRow &) const -> bool = default;
};

inline auto two_tailed_table(int x, int y, int z) -> TwoTailedRow
{
    check_residue(x, "x");
    check_residue(y, "y");
    check_residue(z, "z");
    const int bound = 1 + static_cast<int>((weight(x) + weight(y + z)).ceil());
    const int ceiling = ceil_half(x + y + z + 3);
    return {bound, ceiling, bound <= ceiling};
}

/// (n mod 4, m mod 4, k mod 4).
using ResidueTriple = std::tuple<int, int, int>;

/// Residues (n, m, k) mod 4 for which the two-tailed row fails, in (x, y, z) order.
inline auto two_tailed_exceptions() -> std::vector<ResidueTriple>
{
    std::vector<ResidueTriple> out;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z)
                if (!two_tailed_table(x, y, z).holds)
                    out.emplace_back((x + 1) % 4, (y + 2) % 4, z);
    return out;
}

struct KnownValue
{
    int value;
    bool exact; ///< false: `value` is only an upper bound

    auto operator==(const KnownValue &) const -> bool = default;
};

/// Closed-form gamma_g (Dominator start) or upper bound for families that have one.
inline auto known_family_value(const FamilySpec & spec) -> KnownValue
{
    using namespace family;
    return std::visit(
        detail::Overload{
            [](const Path & f) { return KnownValue{path_cycle_gamma_g(f.n, Shape::Path), true}; },
            [](const Cycle & f) { return KnownValue{path_cycle_gamma_g(f.n, Shape::Cycle), true}; },
            [](const PrimePath & f) { return KnownValue{partial_path_values(f.n, PieceKind::Prime).d_game, true}; },
            [](const DoublePrimePath & f) {
                return KnownValue{partial_path_values(f.n, PieceKind::DoublePrime).d_game, true};
            },
            [](const BrokenLadder & f) {
                if (f.k < 0)
                    throw InvalidArgument("broken-ladder requires k >= 0");
                return KnownValue{2 * (f.k + 2), true};
            },
            [](const HattedCycle & f) {
                if (f.n < 4)
                    throw InvalidArgument("hatted-cycle requires n >= 4");
                const int order = f.n + 1;
                return KnownValue{f.n % 4 == 1 ? order / 2 : ceil_half(order) - 1, true};
            },
            [](const RGraph & f) {
                if (f.n < 2)
                    throw InvalidArgument("r-graph requires n >= 2");
                return KnownValue{2 * f.n + 2, false};
            },
            [](const RPrime11 &) { return KnownValue{6, true}; },
            [](const Tadpole & f) { return KnownValue{ceil_half(f.m + f.n), false}; },
            [](const TwoTailedTadpole & f) { return KnownValue{ceil_half(f.m + f.n + f.k), false}; },
            [](const CycleWithChord & f) { return KnownValue{ceil_half(f.n), false}; },
            [](const FamilyFX & f) { return KnownValue{ceil_half(f.x.order() + f.n), false}; },
            [](const Halin &) -> KnownValue {
                throw InvalidArgument("halin graphs have no closed-form game domination number");
            },
        },
        spec);
}

} // namespace domgame::oracle
