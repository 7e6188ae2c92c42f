#pragma once

#include <array>

/// Published case tables for the tadpole proofs, stored verbatim for regeneration checks.
namespace domgame::reference {

struct TadpoleEntry
{
    int x, y, bound, order, ceiling;
};

/// (x, y, c) with bound 2k+2l+c, order 4k+4l+c, ceil(order/2) = 2k+2l+c.
inline constexpr std::array<TadpoleEntry, 16> kTadpoleTable = {{
    {0, 0, 1, 4, 2},
    {0, 1, 2, 5, 3},
    {0, 2, 3, 6, 3},
    {0, 3, 3, 7, 4},
    {1, 0, 2, 5, 3},
    {1, 1, 3, 6, 3},
    {1, 2, 4, 7, 4},
    {1, 3, 4, 8, 4},
    {2, 0, 3, 6, 3},
    {2, 1, 4, 7, 4},
    {2, 2, 4, 8, 4},
    {2, 3, 5, 9, 5},
    {3, 0, 3, 7, 4},
    {3, 1, 4, 8, 4},
    {3, 2, 5, 9, 5},
    {3, 3, 5, 10, 5},
}};

struct TwoTailedEntry
{
    int x, y, z, bound, ceiling;
    bool holds;
};

/// Constants c of 2k'+2m'+2n'+c for every (x, y, z).
inline constexpr std::array<TwoTailedEntry, 64> kTwoTailedTable = {{
    {0, 0, 0, 1, 2, true},
    {0, 0, 1, 2, 2, true},
    {0, 0, 2, 3, 3, true},
    {0, 0, 3, 3, 3, true},
    {0, 1, 0, 2, 2, true},
    {0, 1, 1, 3, 3, true},
    {0, 1, 2, 3, 3, true},
    {0, 1, 3, 3, 4, true},
    {0, 2, 0, 3, 3, true},
    {0, 2, 1, 3, 3, true},
    {0, 2, 2, 3, 4, true},
    {0, 2, 3, 4, 4, true},
    {0, 3, 0, 3, 3, true},
    {0, 3, 1, 3, 4, true},
    {0, 3, 2, 4, 4, true},
    {0, 3, 3, 5, 5, true},
    {1, 0, 0, 2, 2, true},
    {1, 0, 1, 3, 3, true},
    {1, 0, 2, 4, 3, false},
    {1, 0, 3, 4, 4, true},
    {1, 1, 0, 3, 3, true},
    {1, 1, 1, 4, 3, false},
    {1, 1, 2, 4, 4, true},
    {1, 1, 3, 4, 4, true},
    {1, 2, 0, 4, 3, false},
    {1, 2, 1, 4, 4, true},
    {1, 2, 2, 4, 4, true},
    {1, 2, 3, 5, 5, true},
    {1, 3, 0, 4, 4, true},
    {1, 3, 1, 4, 4, true},
    {1, 3, 2, 5, 5, true},
    {1, 3, 3, 6, 5, false},
    {2, 0, 0, 3, 3, true},
    {2, 0, 1, 4, 3, false},
    {2, 0, 2, 4, 4, true},
    {2, 0, 3, 5, 4, false},
    {2, 1, 0, 4, 3, false},
    {2, 1, 1, 4, 4, true},
    {2, 1, 2, 5, 4, false},
    {2, 1, 3, 5, 5, true},
    {2, 2, 0, 4, 4, true},
    {2, 2, 1, 5, 4, false},
    {2, 2, 2, 5, 5, true},
    {2, 2, 3, 6, 5, false},
    {2, 3, 0, 5, 4, false},
    {2, 3, 1, 5, 5, true},
    {2, 3, 2, 6, 5, false},
    {2, 3, 3, 6, 6, true},
    {3, 0, 0, 3, 3, true},
    {3, 0, 1, 4, 4, true},
    {3, 0, 2, 5, 4, false},
    {3, 0, 3, 5, 5, true},
    {3, 1, 0, 4, 4, true},
    {3, 1, 1, 5, 4, false},
    {3, 1, 2, 5, 5, true},
    {3, 1, 3, 5, 5, true},
    {3, 2, 0, 5, 4, false},
    {3, 2, 1, 5, 5, true},
    {3, 2, 2, 5, 5, true},
    {3, 2, 3, 6, 6, true},
    {3, 3, 0, 5, 5, true},
    {3, 3, 1, 5, 5, true},
    {3, 3, 2, 6, 6, true},
    {3, 3, 3, 7, 6, false},
}};

struct ResidueEntry
{
    int n, m, k;
};

/// Exceptional (n, m, k) residues mod 4, column by column.
inline constexpr std::array<ResidueEntry, 16> kTwoTailedExceptions = {{
    {2, 2, 2}, {2, 3, 1}, {2, 0, 0}, {2, 1, 3},
    {3, 2, 1}, {3, 2, 3}, {3, 3, 0}, {3, 3, 2},
    {3, 0, 1}, {3, 0, 3}, {3, 1, 0}, {3, 1, 2},
    {0, 2, 2}, {0, 3, 1}, {0, 0, 0}, {0, 1, 3},
}};

} // namespace domgame::reference
