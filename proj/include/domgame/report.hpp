#pragma once

#include "domgame/analysis.hpp"
#include "domgame/graph.hpp"
#include "domgame/io.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace domgame::harness {

/// A graph attaining the reported maximum, stored as a full edge list.
struct Witness
{
    std::string label;
    std::vector<Edge> added;
    Graph graph;
    int value = 0;
};

/// Named pass/fail outcome of a table or property check.
struct CheckRow
{
    std::string name;
    std::string detail;
    bool passed = false;

    auto operator==(const CheckRow &) const -> bool = default;
};

struct ExperimentReport
{
    std::string experiment;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::vector<ConjectureRow> rows;
    std::vector<CheckRow> checks;
    int max_value = 0;
    std::vector<Witness> witnesses;
    double wall_seconds = 0;
    std::size_t states_explored = 0;
    /// Violated bounds, oracle disagreements, table mismatches.
    std::vector<std::string> failures;
    /// Evidence and informational findings that are not pass/fail.
    std::vector<std::string> notes;

    auto ok() const -> bool { return failures.empty(); }
};

inline auto edges_json(const std::vector<Edge> & edges) -> nlohmann::ordered_json
{
    auto out = nlohmann::ordered_json::array();
    for (auto [u, v] : edges)
        out.push_back({u, v});
    return out;
}

inline auto row_json(const ConjectureRow & r) -> nlohmann::ordered_json
{
    return {{"family", r.family},   {"params", r.params}, {"n", r.n},
            {"gamma_g", r.gamma_g}, {"bound", r.bound},   {"holds", r.holds},
            {"is_half_graph", r.is_half_graph}};
}

struct JsonOptions
{
    bool include_timing = true;
    /// Witnesses beyond this count are summarised by `witness_count` only.
    std::size_t max_witnesses = 1000;
};

inline auto to_json(const ExperimentReport & report, const JsonOptions & opts = {}) -> nlohmann::ordered_json
{
    nlohmann::ordered_json doc;
    doc["experiment"] = report.experiment;
    doc["parameters"] = report.parameters;
    doc["ok"] = report.ok();
    doc["max_value"] = report.max_value;
    if (opts.include_timing)
        doc["wall_seconds"] = report.wall_seconds;
    doc["states_explored"] = report.states_explored;
    auto rows = nlohmann::ordered_json::array();
    for (const auto & r : report.rows)
        rows.push_back(row_json(r));
    doc["rows"] = rows;
    auto checks = nlohmann::ordered_json::array();
    for (const auto & c : report.checks)
        checks.push_back({{"name", c.name}, {"detail", c.detail}, {"passed", c.passed}});
    doc["checks"] = checks;
    doc["witness_count"] = report.witnesses.size();
    auto witnesses = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < report.witnesses.size() && i < opts.max_witnesses; ++i) {
        const auto & w = report.witnesses[i];
        witnesses.push_back({{"label", w.label},
                             {"value", w.value},
                             {"added", edges_json(w.added)},
                             {"edge_list", io::format_edge_list(w.graph)}});
    }
    doc["witnesses"] = witnesses;
    doc["failures"] = report.failures;
    doc["notes"] = report.notes;
    return doc;
}

inline constexpr const char * kCsvHeader = "family,params,n,gamma_g,bound,holds,is_half_graph";

namespace detail {

inline auto csv_field(const std::string & s) -> std::string
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace detail

/// Conjecture rows as CSV; check rows follow with zero numeric columns.
inline auto to_csv(const ExperimentReport & report) -> std::string
{
    std::ostringstream out;
    out << kCsvHeader << '\n';
    auto b = [](bool v) { return v ? "true" : "false"; };
    for (const auto & r : report.rows)
        out << detail::csv_field(r.family) << ',' << detail::csv_field(r.params) << ',' << r.n << ',' << r.gamma_g
            << ',' << r.bound << ',' << b(r.holds) << ',' << b(r.is_half_graph) << '\n';
    for (const auto & c : report.checks)
        out << detail::csv_field(c.name) << ',' << detail::csv_field(c.detail) << ",0,0,0," << b(c.passed)
            << ",false\n";
    return out.str();
}

/// Line-oriented `key = value` summary.
inline auto to_text(const ExperimentReport & report) -> std::string
{
    std::ostringstream out;
    out << "experiment = " << report.experiment << '\n';
    for (const auto & [key, value] : report.parameters.items())
        out << "param." << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    for (const auto & r : report.rows)
        out << "row = " << r.family << (r.params.empty() ? "" : " ") << r.params << " | n=" << r.n
            << " gamma_g=" << r.gamma_g << " bound=" << r.bound << " holds=" << (r.holds ? "true" : "false")
            << " half=" << (r.is_half_graph ? "true" : "false") << '\n';
    for (const auto & c : report.checks)
        out << "check = " << c.name << " | " << (c.passed ? "pass" : "FAIL") << " | " << c.detail << '\n';
    out << "max_value = " << report.max_value << '\n';
    out << "witness_count = " << report.witnesses.size() << '\n';
    out << "states_explored = " << report.states_explored << '\n';
    for (const auto & n : report.notes)
        out << "note = " << n << '\n';
    for (const auto & f : report.failures)
        out << "failure = " << f << '\n';
    out << "ok = " << (report.ok() ? "true" : "false") << '\n';
    return out.str();
}

} // namespace domgame::harness
