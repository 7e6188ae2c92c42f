#pragma once

#include "domgame/harness.hpp"
#include "domgame/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace domgame::cli {

enum class Format { Json, Csv, Text };

struct CliConfig
{
    int vertex_cap = SolverConfig{}.vertex_cap;
    std::size_t memo_limit = SolverConfig{}.memo_limit;
    bool pruning = true;
    int workers = default_worker_count();
    std::uint64_t seed = 1;
    Format format = Format::Text;
    std::string output;
    bool timing = true;

    auto validate() const -> void
    {
        if (vertex_cap < 1 || vertex_cap > kMaxVertices)
            throw InvalidArgument("--cap must be in [1, " + std::to_string(kMaxVertices) + "], got " +
                                  std::to_string(vertex_cap));
        if (memo_limit < 1)
            throw InvalidArgument("--memo-limit must be positive");
        if (workers < 1)
            throw InvalidArgument("--workers must be positive, got " + std::to_string(workers));
    }

    auto solver() const -> SolverConfig { return SolverConfig{pruning, memo_limit, vertex_cap}; }

    auto harness() const -> harness::HarnessConfig
    {
        harness::HarnessConfig h;
        h.solver = solver();
        h.workers = workers;
        return h;
    }
};

struct UsageError : Error
{
    using Error::Error;
};

namespace detail {

inline auto env_cap() -> std::optional<int>
{
    const char * raw = std::getenv("DOMGAME_CAP");
    if (!raw)
        return std::nullopt;
    std::string text(raw);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 4)
        throw UsageError("DOMGAME_CAP must be a decimal integer, got '" + text + "'");
    return std::stoi(text);
}

inline auto parse_turn(const std::string & s) -> Turn
{
    if (s == "dominator" || s == "d")
        return Turn::Dominator;
    if (s == "staller" || s == "s")
        return Turn::Staller;
    throw UsageError("--start must be dominator or staller, got '" + s + "'");
}

inline auto parse_shape(const std::string & s) -> harness::Shape
{
    if (s == "path")
        return harness::Shape::Path;
    if (s == "cycle")
        return harness::Shape::Cycle;
    throw UsageError("--base must be path or cycle, got '" + s + "'");
}

/// "7" or "4..14".
inline auto parse_range(const std::string & s, const std::string & what) -> std::pair<int, int>
{
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = io::detail::parse_int(s, what);
        return {v, v};
    }
    int lo = io::detail::parse_int(s.substr(0, dots), what);
    int hi = io::detail::parse_int(s.substr(dots + 2), what);
    if (lo > hi)
        throw UsageError(what + " range " + s + " is empty");
    return {lo, hi};
}

inline auto json_ids(VertexSet s) -> nlohmann::ordered_json
{
    auto arr = nlohmann::ordered_json::array();
    for (int v : s.to_vector())
        arr.push_back(v);
    return arr;
}

inline auto ids_or_none(VertexSet s) -> std::string { return s.empty() ? "none" : s.to_string(); }

/// key = value lines, JSON object or two-column CSV for single-result commands.
class Facts
{
public:
    auto add(const std::string & key, nlohmann::ordered_json value, std::string text) -> Facts &
    {
        json_[key] = std::move(value);
        lines_.emplace_back(key, std::move(text));
        return *this;
    }

    auto add(const std::string & key, int value) -> Facts & { return add(key, value, std::to_string(value)); }

    auto render(Format f) const -> std::string
    {
        std::ostringstream os;
        switch (f) {
        case Format::Json:
            os << json_.dump(2) << "\n";
            break;
        case Format::Csv:
            os << "key,value\n";
            for (const auto & [k, v] : lines_)
                os << harness::detail::csv_field(k) << "," << harness::detail::csv_field(v) << "\n";
            break;
        case Format::Text:
            for (const auto & [k, v] : lines_)
                os << k << " = " << v << "\n";
            break;
        }
        return os.str();
    }

private:
    nlohmann::ordered_json json_ = nlohmann::ordered_json::object();
    std::vector<std::pair<std::string, std::string>> lines_;
};

inline auto render(const harness::ExperimentReport & r, const CliConfig & cfg) -> std::string
{
    switch (cfg.format) {
    case Format::Json: {
        harness::JsonOptions opts;
        opts.include_timing = cfg.timing;
        return harness::to_json(r, opts).dump(2) + "\n";
    }
    case Format::Csv:
        return harness::to_csv(r);
    case Format::Text:
        break;
    }
    auto text = harness::to_text(r);
    if (!cfg.timing) {
        std::istringstream in(text);
        std::string line;
        std::string kept;
        while (std::getline(in, line))
            if (line.rfind("wall_seconds", 0) != 0)
                kept += line + "\n";
        return kept;
    }
    return text;
}

} // namespace detail

inline auto write_output(const CliConfig & cfg, std::ostream & out, const std::string & text) -> void
{
    if (cfg.output.empty())
        out << text;
    else
        io::write_file(cfg.output, text);
}

/// Writes a report; failures go to `err` with a dump of every witness. Returns 0 if the report is clean, else 1.
inline auto emit_report(const harness::ExperimentReport & r, const CliConfig & cfg, std::ostream & out,
                        std::ostream & err) -> int
{
    write_output(cfg, out, detail::render(r, cfg));
    if (r.ok())
        return 0;
    for (const auto & f : r.failures)
        err << "violation: " << f << "\n";
    for (const auto & w : r.witnesses)
        err << "witness " << w.label << " (value " << w.value << ")\n" << io::format_edge_list(w.graph);
    return 1;
}

/// Parses `args` (without the program name) and runs one subcommand. Returns the exit code.
inline auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CliConfig cfg;
    CLI::App app{"Exact solver and experiment harness for the domination game"};
    app.name("domgame");
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<int> cap_flag;
    bool no_prune = false;
    bool no_timing = false;
    std::string format = "text";
    app.add_option("--cap", cap_flag, "Largest graph order the game solver accepts (env DOMGAME_CAP)");
    app.add_option("--memo-limit", cfg.memo_limit, "Abort after this many memoized states");
    app.add_flag("--no-prune", no_prune, "Disable Continuation-Principle move pruning");
    app.add_option("--workers", cfg.workers, "Worker threads for sweeps");
    app.add_option("--seed", cfg.seed, "Seed for randomized commands");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output,-o", cfg.output, "Write output to this file instead of stdout");
    app.add_flag("--no-timing", no_timing, "Omit wall-clock time so reports are byte-stable");

    auto * solve = app.add_subcommand("solve", "Game domination number of an edge-list file");
    std::string solve_file;
    std::optional<std::string> dominated_flag;
    std::string start = "dominator";
    solve->add_option("file", solve_file, "Edge-list file")->required();
    solve->add_option("--dominated", dominated_flag, "Comma-separated pre-dominated ids (overrides the file)");
    solve->add_option("--start", start, "dominator (D-game) or staller (S-game)");

    auto * gamma = app.add_subcommand("gamma", "Domination number of an edge-list file");
    std::string gamma_file;
    gamma->add_option("file", gamma_file, "Edge-list file")->required();

    auto * fam = app.add_subcommand("family", "Generate a family member as an edge list");
    std::string fam_name;
    std::vector<std::string> fam_params;
    std::string emit;
    fam->add_option("name", fam_name, "Family name")->required();
    fam->add_option("params", fam_params, "key=value parameters");
    fam->add_option("--emit", emit, "Write the edge list to this file");

    auto * sweep = app.add_subcommand("sweep", "Solve a range of family members");
    std::string sweep_name;
    std::vector<std::string> sweep_words;
    sweep->add_option("name", sweep_name, "Family name")->required();
    sweep->add_option("ranges", sweep_words, "key=lo..hi, key=value, max-order=N, random=COUNT");

    auto * add = app.add_subcommand("add-edges", "Maximum gamma_g over paths or cycles with added edges");
    std::string base = "path";
    std::string n_text;
    int k = 2;
    bool full = false;
    bool no_symmetry = false;
    add->add_option("--base", base, "path or cycle");
    add->add_option("--n", n_text, "Order, or lo..hi")->required();
    add->add_option("--k", k, "Number of added edges");
    add->add_flag("--full", full, "Allow the long published ranges");
    add->add_flag("--no-symmetry", no_symmetry, "Solve every edge set instead of orbit representatives");

    auto * tables = app.add_subcommand("verify-tables", "Regenerate the tadpole case tables");

    auto * check_r = app.add_subcommand("check-r", "gamma_g(R_{4n+3}) against 2n+2");
    int r_max = 4;
    check_r->add_option("--max", r_max, "Largest n");

    auto * props = app.add_subcommand("props", "Seeded randomized invariant checks");
    int trials = 500;
    props->add_option("--trials", trials, "Trials per property");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n" << "run 'domgame --help' for usage\n";
        return 2;
    }

    auto emit_text = [&](const std::string & text) { write_output(cfg, out, text); };
    auto finish = [&](const harness::ExperimentReport & r) { return emit_report(r, cfg, out, err); };

    try {
        if (auto env = detail::env_cap())
            cfg.vertex_cap = *env;
        if (cap_flag)
            cfg.vertex_cap = *cap_flag;
        cfg.pruning = !no_prune;
        cfg.timing = !no_timing;
        cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
        cfg.validate();

        if (solve->parsed()) {
            const Turn turn = detail::parse_turn(start);
            auto pg = io::load_edge_list(solve_file);
            if (dominated_flag)
                pg.dominated = io::to_vertex_set(io::parse_vertex_list(*dominated_flag), pg.graph.order());
            GameSolver solver(pg.graph, cfg.solver());
            const int value = solver.value(pg.dominated, turn).moves;
            const int other_value = solver.value(pg.dominated, other(turn)).moves;
            VertexSet moves;
            if (pg.dominated != pg.graph.all())
                moves = solver.optimal_first_moves(pg.dominated, turn);
            detail::Facts facts;
            facts.add("file", solve_file, solve_file)
                .add("n", pg.graph.order())
                .add("m", pg.graph.edge_count())
                .add("start", to_string(turn), to_string(turn))
                .add("dominated", detail::json_ids(pg.dominated), detail::ids_or_none(pg.dominated))
                .add(turn == Turn::Dominator ? "gamma_g" : "gamma_g'", value)
                .add("optimal_first_moves", detail::json_ids(moves), detail::ids_or_none(moves))
                .add("states_explored", static_cast<int>(solver.stats().states));
            if (value - other_value > 1 || other_value - value > 1)
                facts.add("warning", "D-game and S-game values differ by more than 1",
                          "D-game and S-game values differ by more than 1 (" + std::to_string(value) + " vs " +
                              std::to_string(other_value) + ")");
            emit_text(facts.render(cfg.format));
            return 0;
        }
        if (gamma->parsed()) {
            auto pg = io::load_edge_list(gamma_file);
            auto d = minimum_dominating_set(pg.graph);
            detail::Facts facts;
            facts.add("file", gamma_file, gamma_file)
                .add("n", pg.graph.order())
                .add("gamma", d.size())
                .add("dominating_set", detail::json_ids(d), detail::ids_or_none(d));
            emit_text(facts.render(cfg.format));
            return 0;
        }
        if (fam->parsed()) {
            auto lg = generate(parse_family_spec(fam_name, fam_params));
            auto text = io::format_edge_list(lg.partial());
            if (emit.empty()) {
                emit_text(text);
                return 0;
            }
            io::write_file(emit, text);
            detail::Facts facts;
            facts.add("family", describe(lg.spec), describe(lg.spec))
                .add("n", lg.graph.order())
                .add("m", lg.graph.edge_count())
                .add("written", emit, emit);
            emit_text(facts.render(cfg.format));
            return 0;
        }
        if (sweep->parsed()) {
            std::vector<harness::ParamRange> ranges;
            std::vector<std::string> fixed;
            int max_order = cfg.vertex_cap;
            std::optional<int> random_count;
            for (const auto & word : sweep_words) {
                auto eq = word.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw UsageError("sweep argument '" + word + "' is not of the form key=value");
                auto key = word.substr(0, eq);
                auto value = word.substr(eq + 1);
                if (key == "max-order")
                    max_order = io::detail::parse_int(value, "max-order");
                else if (key == "random")
                    random_count = io::detail::parse_int(value, "random");
                else if (value.find("..") != std::string::npos) {
                    auto [lo, hi] = detail::parse_range(value, key);
                    ranges.push_back({key, lo, hi});
                }
                else
                    fixed.push_back(word);
            }
            std::vector<FamilySpec> specs;
            int skipped = 0;
            if (random_count) {
                if (sweep_name != "family-fx")
                    throw UsageError("random= is only supported for family-fx");
                Rng rng(cfg.seed);
                for (int i = 0; i < *random_count; ++i)
                    specs.push_back(harness::random_family_fx(rng, max_order));
            }
            else
                specs = harness::expand_family_range(sweep_name, ranges, fixed, max_order, skipped);
            if (specs.empty())
                throw UsageError("sweep over " + sweep_name + " selects no valid instances");
            auto report = harness::sweep_family(specs, cfg.harness(), "sweep");
            report.parameters["family"] = sweep_name;
            report.parameters["max_order"] = max_order;
            report.parameters["skipped"] = skipped;
            if (random_count)
                report.parameters["seed"] = cfg.seed;
            return finish(report);
        }
        if (add->parsed()) {
            const auto shape = detail::parse_shape(base);
            auto [lo, hi] = detail::parse_range(n_text, "--n");
            const int desk = harness::desk_cap(shape, k);
            const int cap = full ? harness::full_cap(shape, k) : desk;
            if (hi > cap)
                throw UsageError("order " + std::to_string(hi) + " exceeds the " + std::string(full ? "full" : "desk") +
                                 "-scale cap " + std::to_string(cap) + " for " + base + "+" + std::to_string(k) +
                                 " edges" + (full ? "" : "; pass --full to allow up to " +
                                                              std::to_string(harness::full_cap(shape, k))));
            if (hi > desk)
                err << "warning: orders above " << desk << " can take hours\n";
            auto hcfg = cfg.harness();
            hcfg.symmetry = !no_symmetry;
            auto report = lo == hi ? harness::enumerate_edge_additions(shape, lo, k, hcfg, cap)
                                   : harness::sweep_edge_additions(shape, lo, hi, k, hcfg, cap);
            return finish(report);
        }
        if (tables->parsed())
            return finish(harness::verify_tables());
        if (check_r->parsed())
            return finish(harness::check_r_equality(r_max, cfg.harness()));
        if (props->parsed())
            return finish(harness::property_suite(cfg.seed, trials, cfg.harness()));
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace domgame::cli
