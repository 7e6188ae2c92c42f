#pragma once

#include "domgame/errors.hpp"
#include "domgame/graph.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace domgame::io {

namespace detail {

inline auto split_words(std::string_view line) -> std::vector<std::string_view>
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ')
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline auto parse_int(std::string_view word, const std::string & where) -> int
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size() || value < 0)
        throw ParseError(where + ": expected a non-negative integer, got '" + std::string(word) + "'");
    return value;
}

} // namespace detail

/// Parses a comma-separated vertex list such as "0,1,2". Empty input is the empty set.
inline auto parse_vertex_list(std::string_view text) -> std::vector<int>
{
    std::vector<int> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto word = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(detail::parse_int(word, "vertex list"));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

inline auto to_vertex_set(const std::vector<int> & ids, int n) -> VertexSet
{
    VertexSet s;
    for (int v : ids) {
        if (v >= n)
            throw InvalidGraph("dominated vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
        s.insert(v);
    }
    return s;
}

/**
 * Reads the edge-list text format:
 *
 *     n m
 *     u v        (m lines, u < v)
 *     dominated: i j k   (optional)
 */
inline auto parse_edge_list(std::string_view text) -> PartiallyDominatedGraph
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos)
            nl = text.size();
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    while (!lines.empty() && lines.back().empty())
        lines.pop_back();
    if (lines.empty())
        throw ParseError("edge list: empty input");

    auto header = detail::split_words(lines[0]);
    if (header.size() != 2)
        throw ParseError("edge list line 1: expected 'n m'");
    const int n = detail::parse_int(header[0], "edge list line 1");
    const int m = detail::parse_int(header[1], "edge list line 1");
    if (n > kMaxVertices)
        throw CapacityExceeded("edge list declares " + std::to_string(n) + " vertices; capacity is " +
                               std::to_string(kMaxVertices));
    if (static_cast<int>(lines.size()) < m + 1)
        throw ParseError("edge list: header declares " + std::to_string(m) + " edges but only " +
                         std::to_string(lines.size() - 1) + " lines follow");

    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 1; i <= m; ++i) {
        const std::string where = "edge list line " + std::to_string(i + 1);
        auto words = detail::split_words(lines[i]);
        if (words.size() != 2)
            throw ParseError(where + ": expected 'u v'");
        int u = detail::parse_int(words[0], where);
        int v = detail::parse_int(words[1], where);
        if (u >= v)
            throw ParseError(where + ": endpoints must satisfy u < v");
        if (v >= n)
            throw ParseError(where + ": endpoint " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
        edges.emplace_back(u, v);
    }

    VertexSet dominated;
    if (static_cast<int>(lines.size()) > m + 1) {
        if (static_cast<int>(lines.size()) > m + 2)
            throw ParseError("edge list: unexpected content after line " + std::to_string(m + 2));
        constexpr std::string_view prefix = "dominated:";
        auto line = lines[m + 1];
        if (line.substr(0, prefix.size()) != prefix)
            throw ParseError("edge list line " + std::to_string(m + 2) + ": expected 'dominated: ...'");
        for (auto word : detail::split_words(line.substr(prefix.size()))) {
            int v = detail::parse_int(word, "dominated line");
            if (v >= n)
                throw ParseError("dominated vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
            dominated.insert(v);
        }
    }
    return {Graph::from_edges(n, edges), dominated};
}

/// Writes the edge-list format; the dominated line is emitted only when the set is non-empty.
inline auto format_edge_list(const PartiallyDominatedGraph & pg) -> std::string
{
    std::ostringstream out;
    auto edges = pg.graph.edges();
    out << pg.graph.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
    if (!pg.dominated.empty()) {
        out << "dominated:";
        pg.dominated.for_each([&](int v) { out << ' ' << v; });
        out << '\n';
    }
    return out.str();
}

inline auto format_edge_list(const Graph & g) -> std::string
{
    return format_edge_list(PartiallyDominatedGraph{g, {}});
}

inline auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline auto write_file(const std::string & path, std::string_view content) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << content;
    if (!out)
        throw ParseError("write to '" + path + "' failed");
}

inline auto load_edge_list(const std::string & path) -> PartiallyDominatedGraph
{
    auto text = read_file(path);
    try {
        return parse_edge_list(text);
    }
    catch (const Error & e) {
        throw ParseError(path + ": " + e.what());
    }
}

/// Standard graph6 encoding (no ">>graph6<<" header, no trailing newline).
inline auto to_graph6(const Graph & g) -> std::string
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    }
    else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

inline auto from_graph6(std::string_view text) -> Graph
{
    if (text.substr(0, 10) == ">>graph6<<")
        text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte outside the printable range 63..126");

    std::size_t pos = 0;
    int n = 0;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    }
    else {
        if (text.size() < 4 || text[1] == 126)
            throw ParseError("graph6: unsupported or truncated order prefix");
        n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
        pos = 4;
    }
    if (n > kMaxVertices)
        throw CapacityExceeded("graph6 order " + std::to_string(n) + " exceeds capacity " +
                               std::to_string(kMaxVertices));
    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (text.size() - pos != byte_count)
        throw ParseError("graph6: expected " + std::to_string(byte_count) + " adjacency bytes, got " +
                         std::to_string(text.size() - pos));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

} // namespace domgame::io
