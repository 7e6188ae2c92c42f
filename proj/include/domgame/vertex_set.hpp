#pragma once

#include <bit>
#include <cstdint>
#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace domgame {

/// Maximum number of vertices any Graph may hold. One machine word per set.
inline constexpr int kMaxVertices = 64;

/**
 * A set of vertex ids backed by a single 64-bit word.
 *
 * All operations are value-returning and free of side effects, so sets can be
 * passed around and shared like integers. Bit i is vertex i.
 */
class VertexSet
{
public:
    using Word = std::uint64_t;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Word bits) : bits_(bits) {}

    VertexSet(std::initializer_list<int> vertices)
    {
        for (int v : vertices)
            insert(v);
    }

    /// The set {0, 1, ..., n-1}.
    static constexpr auto first(int n) -> VertexSet
    {
        if (n < 0 || n > kMaxVertices)
            throw std::out_of_range("VertexSet::first: size out of range");
        return VertexSet(n == kMaxVertices ? ~Word{0} : ((Word{1} << n) - 1));
    }

    static constexpr auto singleton(int v) -> VertexSet
    {
        check_index(v);
        return VertexSet(Word{1} << v);
    }

    constexpr auto bits() const -> Word { return bits_; }

    constexpr auto contains(int v) const -> bool
    {
        return v >= 0 && v < kMaxVertices && ((bits_ >> v) & 1U) != 0;
    }

    constexpr auto insert(int v) -> void
    {
        check_index(v);
        bits_ |= Word{1} << v;
    }

    constexpr auto erase(int v) -> void
    {
        check_index(v);
        bits_ &= ~(Word{1} << v);
    }

    constexpr auto empty() const -> bool { return bits_ == 0; }
    constexpr auto size() const -> int { return std::popcount(bits_); }

    /// Lowest member, or -1 for the empty set.
    constexpr auto lowest() const -> int { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    /// Highest member, or -1 for the empty set.
    constexpr auto highest() const -> int { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

    constexpr auto operator|(VertexSet o) const -> VertexSet { return VertexSet(bits_ | o.bits_); }
    constexpr auto operator&(VertexSet o) const -> VertexSet { return VertexSet(bits_ & o.bits_); }
    constexpr auto operator-(VertexSet o) const -> VertexSet { return VertexSet(bits_ & ~o.bits_); }
    constexpr auto operator|=(VertexSet o) -> VertexSet & { bits_ |= o.bits_; return *this; }
    constexpr auto operator&=(VertexSet o) -> VertexSet & { bits_ &= o.bits_; return *this; }
    constexpr auto operator-=(VertexSet o) -> VertexSet & { bits_ &= ~o.bits_; return *this; }

    constexpr auto subset_of(VertexSet o) const -> bool { return (bits_ & ~o.bits_) == 0; }

    /// Shift every member up by `offset` ids.
    constexpr auto shifted(int offset) const -> VertexSet
    {
        if (offset < 0)
            throw std::out_of_range("VertexSet::shifted: negative offset");
        if (bits_ == 0)
            return {};
        if (highest() + offset >= kMaxVertices)
            throw std::out_of_range("VertexSet::shifted: capacity exceeded");
        return VertexSet(bits_ << offset);
    }

    constexpr auto operator==(const VertexSet &) const -> bool = default;
    constexpr auto operator<=>(const VertexSet &) const = default;

    /// Members in increasing order.
    auto to_vector() const -> std::vector<int>
    {
        std::vector<int> out;
        out.reserve(size());
        for (Word w = bits_; w != 0; w &= w - 1)
            out.push_back(std::countr_zero(w));
        return out;
    }

    /// Calls `f(v)` for each member in increasing order.
    template <typename F>
    constexpr auto for_each(F && f) const -> void
    {
        for (Word w = bits_; w != 0; w &= w - 1)
            f(std::countr_zero(w));
    }

    /// Comma-separated member list, e.g. "0,3,7".
    auto to_string() const -> std::string
    {
        std::string out;
        for_each([&](int v) {
            if (!out.empty())
                out += ',';
            out += std::to_string(v);
        });
        return out;
    }

private:
    static constexpr auto check_index(int v) -> void
    {
        if (v < 0 || v >= kMaxVertices)
            throw std::out_of_range("vertex id " + std::to_string(v) + " outside [0, 64)");
    }

    Word bits_ = 0;
};

} // namespace domgame
