#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sx/adjacency.hpp"
#include "sx/centrality.hpp"
#include "sx/complex.hpp"
#include "sx/csv.hpp"
#include "sx/graph.hpp"
#include "sx/ranking.hpp"
#include "sx/walks.hpp"

namespace sx {

inline constexpr const char* kToolVersion = "1.0.0";

struct AnalysisOptions {
    bool keep_isolated = false;
    std::optional<int> max_dim;
    /// Levels to analyze. Empty means 0..min(2, dim), or 0..dim with `all_levels`.
    std::vector<int> levels;
    bool all_levels = false;
    std::vector<Measure> measures{std::begin(kAllMeasures), std::end(kAllMeasures)};
    double tol = 1e-10;
    std::size_t max_iter = 100000;
    std::size_t top_n = 5;

    friend bool operator==(const AnalysisOptions&, const AnalysisOptions&) = default;
};

/// Clique census of the underlying graph: the Table-style summary tuple.
struct ComplexSummary {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::map<std::size_t, std::size_t> clique_counts; // clique size -> count
    std::size_t clique_number = 0;
    int dim = -1;

    std::size_t cliques_of_size(std::size_t s) const {
        auto it = clique_counts.find(s);
        return it == clique_counts.end() ? 0 : it->second;
    }

    friend bool operator==(const ComplexSummary&, const ComplexSummary&) = default;
};

struct LevelResult {
    int k = 0;
    std::size_t simplex_count = 0; // 0 marks a requested level with no simplices
    bool connected = false;
    std::vector<std::size_t> component_sizes;
    std::size_t isolated = 0;
    std::map<Measure, Ranking> measures;

    friend bool operator==(const LevelResult&, const LevelResult&) = default;
};

struct AnalysisRun {
    std::string network;
    AnalysisOptions options;
    std::vector<std::string> vertices; // labels indexed by vertex id
    ComplexSummary summary;
    std::vector<LevelResult> levels;
    std::map<Measure, CrossLevelReport> cross_level;
    std::vector<std::string> warnings;
    std::string input_digest;
    std::string tool_version = kToolVersion;

    friend bool operator==(const AnalysisRun&, const AnalysisRun&) = default;
};

inline ComplexSummary summarize(const Graph& g, const SimplicialComplex& c) {
    ComplexSummary s;
    s.vertices = g.vertex_count();
    s.edges = g.edge_count();
    s.clique_number = clique_number(g);
    s.dim = c.dim();
    for (int k = 0; k <= c.dim(); ++k) s.clique_counts[static_cast<std::size_t>(k) + 1] = c.count(k);
    return s;
}

/// Tie tolerance used when ranking each measure: exact for the integer and
/// rational-valued measures, loose enough to merge round-off for iterative ones.
inline double ranking_tie_tolerance(Measure m) {
    return (m == Measure::eigenvector || m == Measure::subgraph) ? 1e-9 : 0.0;
}

/// Connectivity of every level 0..dim, independent of centrality work.
inline std::vector<LevelConnectivity> connectivity_table(const SimplicialComplex& c) {
    std::vector<LevelConnectivity> out;
    for (int k = 0; k <= c.dim(); ++k) out.push_back(components_at_level(c, k));
    return out;
}

/// normalize -> clique complex -> per-level adjacency, distances, centralities
/// and rankings -> cross-level report.
inline AnalysisRun run_analysis(const RawMatrix& raw, const AnalysisOptions& opts,
                                std::string network = {}, std::string digest = {}) {
    AnalysisRun run;
    run.network = std::move(network);
    run.options = opts;
    run.input_digest = std::move(digest);
    run.warnings = raw.warnings;

    const Graph g = normalize_graph(raw, opts.keep_isolated);
    run.vertices = g.labels();
    if (g.vertex_count() == 0) {
        run.warnings.emplace_back("graph is empty after normalization");
        return run;
    }
    const SimplicialComplex c = clique_complex(g, opts.max_dim);
    run.summary = summarize(g, c);

    std::vector<int> levels = opts.levels;
    if (levels.empty()) {
        const int top = opts.all_levels ? c.dim() : std::min(2, c.dim());
        for (int k = 0; k <= top; ++k) levels.push_back(k);
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    CentralityOptions copts;
    copts.eigenvector.tol = opts.tol;
    copts.eigenvector.max_iter = opts.max_iter;

    for (int k : levels) {
        if (k < 0) throw InputError("levels must be nonnegative");
        LevelResult lr;
        lr.k = k;
        lr.simplex_count = c.count(k);
        if (lr.simplex_count == 0) {
            run.warnings.push_back("no " + std::to_string(k) + "-simplices");
            run.levels.push_back(std::move(lr));
            continue;
        }
        const auto adj = level_adjacency(c, k);
        const auto conn = connectivity(adj);
        lr.connected = conn.connected();
        for (const auto& comp : conn.components) lr.component_sizes.push_back(comp.size());
        lr.isolated = conn.isolated.size();

        const auto dist = all_pairs_distances(adj);
        for (Measure m : opts.measures) {
            const auto scores = compute_centrality(adj, dist, m, copts);
            lr.measures[m] = rank_simplices(scores, adj.simplices, ranking_tie_tolerance(m));
        }
        run.levels.push_back(std::move(lr));
    }

    for (Measure m : opts.measures) {
        std::vector<Ranking> per_level;
        for (const auto& lr : run.levels)
            if (auto it = lr.measures.find(m); it != lr.measures.end()) per_level.push_back(it->second);
        run.cross_level[m] = cross_level_report(per_level, opts.top_n);
    }
    return run;
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline nlohmann::json simplex_to_json(const Simplex& s, const std::vector<std::string>& names) {
    auto out = nlohmann::json::array();
    for (VertexId v : s.vertices()) out.push_back(v < names.size() ? names[v] : std::to_string(v));
    return out;
}

inline Simplex simplex_from_json(const nlohmann::json& j, const std::map<std::string, VertexId>& ids) {
    std::vector<VertexId> v;
    for (const auto& name : j) {
        auto it = ids.find(name.get<std::string>());
        if (it == ids.end()) throw InputError("report names unknown vertex '" + name.get<std::string>() + "'");
        v.push_back(it->second);
    }
    return Simplex(std::move(v));
}

inline nlohmann::json flags_to_json(std::uint8_t flags) { return flag_names(flags); }

inline std::uint8_t flags_from_json(const nlohmann::json& j) {
    std::uint8_t f = kNoFlags;
    for (const auto& name : j) f |= parse_flag(name.get<std::string>());
    return f;
}

} // namespace detail

inline nlohmann::json to_json(const AnalysisRun& run) {
    using nlohmann::json;
    const auto& names = run.vertices;

    json options = {
        {"keep_isolated", run.options.keep_isolated},
        {"max_dim", run.options.max_dim ? json(*run.options.max_dim) : json(nullptr)},
        {"levels", run.options.levels},
        {"all_levels", run.options.all_levels},
        {"tol", run.options.tol},
        {"max_iter", run.options.max_iter},
        {"top_n", run.options.top_n},
    };
    json measures = json::array();
    for (Measure m : run.options.measures) measures.push_back(std::string(to_string(m)));
    options["measures"] = measures;

    json levels = json::array();
    for (const auto& lr : run.levels) {
        json l = {{"k", lr.k}, {"simplex_count", lr.simplex_count}};
        if (lr.simplex_count > 0) {
            l["connected"] = lr.connected;
            l["components"] = lr.component_sizes;
            l["isolated"] = lr.isolated;
            json ms = json::object();
            for (const auto& [m, ranking] : lr.measures) {
                json rows = json::array();
                for (const auto& e : ranking.entries)
                    rows.push_back({{"simplex", detail::simplex_to_json(e.simplex, names)},
                                    {"index", e.index},
                                    {"score", e.score},
                                    {"rank", e.rank},
                                    {"flags", detail::flags_to_json(e.flags)}});
                ms[std::string(to_string(m))] = rows;
            }
            l["measures"] = ms;
        }
        levels.push_back(l);
    }

    json counts = json::object();
    for (const auto& [size, n] : run.summary.clique_counts) counts[std::to_string(size)] = n;
    json summary = {{"vertices", run.summary.vertices},
                    {"edges", run.summary.edges},
                    {"clique_counts", counts},
                    {"clique_number", run.summary.clique_number},
                    {"dim", run.summary.dim}};

    json cross = json::object();
    for (const auto& [m, rep] : run.cross_level) {
        json lift = json::array();
        for (const auto& row : rep.lift) {
            json vr = json::array();
            for (const auto& [v, rank] : row.vertex_ranks)
                vr.push_back({{"vertex", v < names.size() ? names[v] : std::to_string(v)},
                              {"rank", rank ? json(*rank) : json(nullptr)}});
            lift.push_back({{"k", row.k},
                            {"simplex", detail::simplex_to_json(row.simplex, names)},
                            {"rank", row.rank},
                            {"score", row.score},
                            {"vertex_ranks", vr}});
        }
        json agreement = json::array();
        for (const auto& a : rep.agreement) {
            const auto f = a.fraction();
            agreement.push_back({{"k_low", a.k_low},
                                 {"k_high", a.k_high},
                                 {"shared_vertices", a.shared_vertices},
                                 {"comparable_pairs", a.comparable_pairs},
                                 {"concordant_pairs", a.concordant_pairs},
                                 {"concordance", f ? json(*f) : json(nullptr)}});
        }
        cross[std::string(to_string(m))] = {{"top_n", rep.top_n}, {"lift", lift}, {"agreement", agreement}};
    }

    return json{{"network", run.network},
                {"options", options},
                {"vertices", run.vertices},
                {"levels", levels},
                {"summary", summary},
                {"cross_level", cross},
                {"warnings", run.warnings},
                {"provenance", {{"input_digest", run.input_digest}, {"tool_version", run.tool_version}}}};
}

inline AnalysisRun analysis_from_json(const nlohmann::json& j) {
    AnalysisRun run;
    try {
        run.network = j.at("network").get<std::string>();
        const auto& o = j.at("options");
        run.options.keep_isolated = o.at("keep_isolated").get<bool>();
        if (!o.at("max_dim").is_null()) run.options.max_dim = o.at("max_dim").get<int>();
        run.options.levels = o.at("levels").get<std::vector<int>>();
        run.options.all_levels = o.at("all_levels").get<bool>();
        run.options.tol = o.at("tol").get<double>();
        run.options.max_iter = o.at("max_iter").get<std::size_t>();
        run.options.top_n = o.at("top_n").get<std::size_t>();
        run.options.measures.clear();
        for (const auto& m : o.at("measures")) run.options.measures.push_back(parse_measure(m.get<std::string>()));

        run.vertices = j.at("vertices").get<std::vector<std::string>>();
        std::map<std::string, VertexId> ids;
        for (std::size_t i = 0; i < run.vertices.size(); ++i) ids[run.vertices[i]] = static_cast<VertexId>(i);

        for (const auto& l : j.at("levels")) {
            LevelResult lr;
            lr.k = l.at("k").get<int>();
            lr.simplex_count = l.at("simplex_count").get<std::size_t>();
            if (lr.simplex_count > 0) {
                lr.connected = l.at("connected").get<bool>();
                lr.component_sizes = l.at("components").get<std::vector<std::size_t>>();
                lr.isolated = l.at("isolated").get<std::size_t>();
                for (const auto& [name, rows] : l.at("measures").items()) {
                    Ranking r;
                    r.k = lr.k;
                    r.measure = parse_measure(name);
                    for (const auto& row : rows)
                        r.entries.push_back(RankEntry{row.at("index").get<std::size_t>(),
                                                      detail::simplex_from_json(row.at("simplex"), ids),
                                                      row.at("score").get<double>(),
                                                      row.at("rank").get<std::size_t>(),
                                                      detail::flags_from_json(row.at("flags"))});
                    lr.measures[r.measure] = std::move(r);
                }
            }
            run.levels.push_back(std::move(lr));
        }

        const auto& s = j.at("summary");
        run.summary.vertices = s.at("vertices").get<std::size_t>();
        run.summary.edges = s.at("edges").get<std::size_t>();
        run.summary.clique_number = s.at("clique_number").get<std::size_t>();
        run.summary.dim = s.at("dim").get<int>();
        for (const auto& [size, n] : s.at("clique_counts").items())
            run.summary.clique_counts[std::stoul(size)] = n.get<std::size_t>();

        for (const auto& [name, rep] : j.at("cross_level").items()) {
            CrossLevelReport c;
            c.measure = parse_measure(name);
            c.top_n = rep.at("top_n").get<std::size_t>();
            for (const auto& row : rep.at("lift")) {
                LiftRow lr{row.at("k").get<int>(), detail::simplex_from_json(row.at("simplex"), ids),
                           row.at("rank").get<std::size_t>(), row.at("score").get<double>(), {}};
                for (const auto& vr : row.at("vertex_ranks")) {
                    const auto& id = ids.at(vr.at("vertex").get<std::string>());
                    lr.vertex_ranks.emplace_back(
                        id, vr.at("rank").is_null() ? std::nullopt
                                                    : std::optional(vr.at("rank").get<std::size_t>()));
                }
                c.lift.push_back(std::move(lr));
            }
            for (const auto& a : rep.at("agreement"))
                c.agreement.push_back(LevelAgreement{a.at("k_low").get<int>(), a.at("k_high").get<int>(),
                                                     a.at("shared_vertices").get<std::size_t>(),
                                                     a.at("comparable_pairs").get<std::size_t>(),
                                                     a.at("concordant_pairs").get<std::size_t>()});
            run.cross_level[c.measure] = std::move(c);
        }
        run.warnings = j.at("warnings").get<std::vector<std::string>>();
        run.input_digest = j.at("provenance").at("input_digest").get<std::string>();
        run.tool_version = j.at("provenance").at("tool_version").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
    return run;
}

inline AnalysisRun read_report(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("cannot parse " + path.string() + ": " + e.what());
    }
    return analysis_from_json(j);
}

// ---------------------------------------------------------------------------
// Writers

/// Shortest decimal that round-trips to the same double.
inline std::string format_score(double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

inline void write_report_json(const AnalysisRun& run, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << to_json(run).dump(2) << '\n';
    if (!out) throw IoError("failed writing " + path.string());
}

/// One `k<level>_<measure>.csv` per (level, measure) inside `dir`, columns
/// simplex;score;rank;flags. Returns the files written.
inline std::vector<std::filesystem::path> write_report_csv(const AnalysisRun& run,
                                                           const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    std::vector<std::filesystem::path> written;
    for (const auto& lr : run.levels)
        for (const auto& [m, ranking] : lr.measures) {
            const auto path = dir / ("k" + std::to_string(lr.k) + "_" + std::string(to_string(m)) + ".csv");
            std::ofstream out(path);
            if (!out) throw IoError("cannot write " + path.string());
            out << "simplex;score;rank;flags\n";
            for (const auto& e : ranking.entries) {
                std::string flags;
                for (const auto& f : flag_names(e.flags)) flags += (flags.empty() ? "" : "|") + f;
                out << format_simplex(e.simplex, run.vertices) << ';' << format_score(e.score) << ';'
                    << e.rank << ';' << flags << '\n';
            }
            if (!out) throw IoError("failed writing " + path.string());
            written.push_back(path);
        }
    return written;
}

enum class ReportFormat { json, csv };

inline void write_report(const AnalysisRun& run, ReportFormat format, const std::filesystem::path& path) {
    if (format == ReportFormat::json) write_report_json(run, path);
    else write_report_csv(run, path);
}

/// Compares a summary against an expected-count sidecar such as
/// {"vertices": 18, "edges": 33, "cliques": {"2": 33, "3": 5}, "clique_number": 3}.
/// Returns one message per mismatching field.
inline std::vector<std::string> check_expected_counts(const ComplexSummary& s, const nlohmann::json& expected) {
    std::vector<std::string> out;
    auto check = [&](const std::string& what, std::size_t got, const nlohmann::json& want) {
        if (want.get<std::size_t>() != got)
            out.push_back(what + ": expected " + std::to_string(want.get<std::size_t>()) + ", got " +
                          std::to_string(got));
    };
    if (expected.contains("vertices")) check("vertices", s.vertices, expected["vertices"]);
    if (expected.contains("edges")) check("edges", s.edges, expected["edges"]);
    if (expected.contains("clique_number")) check("clique_number", s.clique_number, expected["clique_number"]);
    if (expected.contains("cliques"))
        for (const auto& [size, n] : expected["cliques"].items())
            check(size + "-cliques", s.cliques_of_size(std::stoul(size)), n);
    return out;
}

} // namespace sx
