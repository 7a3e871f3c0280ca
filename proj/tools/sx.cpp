// sx: clique-complex construction and simplicial centrality from adjacency matrices.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "sx/sx.hpp"

namespace {

enum ExitCode { kOk = 0, kInputError = 1, kNonConvergence = 2, kIoError = 3 };

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sx::IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string data = buf.str();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw sx::IoError("sha256 failed");
    std::ostringstream hex;
    for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return "sha256:" + hex.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);)
        if (!item.empty()) out.push_back(item);
    return out;
}

sx::RawMatrix load(const std::string& path) {
    auto raw = sx::parse_matrix_csv(std::filesystem::path(path));
    for (const auto& w : raw.warnings) std::cerr << "warning: " << w << '\n';
    return raw;
}

struct GraphOptions {
    bool keep_isolated = false;
    int max_dim = 0; // 0 = uncapped
};

void add_graph_options(CLI::App* cmd, GraphOptions& g) {
    cmd->add_flag("--keep-isolated", g.keep_isolated, "Keep degree-0 vertices");
    cmd->add_option("--max-dim", g.max_dim, "Largest simplex dimension to build (>= 1)")
        ->check(CLI::PositiveNumber);
}

std::optional<int> cap(const GraphOptions& g) {
    return g.max_dim > 0 ? std::optional(g.max_dim) : std::nullopt;
}

int cmd_cliques(const std::string& path, const GraphOptions& g, const std::string& expect) {
    const auto raw = load(path);
    const auto graph = sx::normalize_graph(raw, g.keep_isolated);
    const auto complex = sx::clique_complex(graph, cap(g));
    const auto s = sx::summarize(graph, complex);
    std::cout << "vertices " << s.vertices << '\n'
              << "edges " << s.edges << '\n';
    for (const auto& [size, n] : s.clique_counts) std::cout << size << "-cliques " << n << '\n';
    std::cout << "clique_number " << s.clique_number << '\n';
    if (!expect.empty()) {
        std::ifstream in(expect);
        if (!in) throw sx::IoError("cannot open " + expect);
        nlohmann::json want;
        try {
            in >> want;
        } catch (const nlohmann::json::exception& e) {
            throw sx::InputError("cannot parse " + expect + ": " + e.what());
        }
        const auto diffs = sx::check_expected_counts(s, want);
        for (const auto& d : diffs) std::cerr << "discrepancy: " << d << '\n';
        if (diffs.empty()) std::cerr << "expected counts: all match\n";
    }
    return kOk;
}

int cmd_connectivity(const std::string& path, const GraphOptions& g, bool all_levels) {
    const auto raw = load(path);
    const auto graph = sx::normalize_graph(raw, g.keep_isolated);
    const auto complex = sx::clique_complex(graph, cap(g));
    const int top = all_levels ? complex.dim() : std::min(2, complex.dim());
    std::cout << "level\tsimplices\tcomponents\tisolated\tconnected\n";
    for (int k = 0; k <= top; ++k) {
        const auto c = sx::components_at_level(complex, k);
        std::cout << k << '\t' << c.simplex_count << '\t' << c.components.size() << '\t'
                  << c.isolated.size() << '\t' << (c.connected() ? "connected" : "disconnected");
        if (c.simplex_count == 1) std::cout << " (single simplex)";
        std::cout << '\n';
    }
    return kOk;
}

int cmd_walk(const std::string& path, const GraphOptions& g, const std::string& from,
             const std::string& to) {
    const auto raw = load(path);
    const auto graph = sx::normalize_graph(raw, g.keep_isolated);
    const auto complex = sx::clique_complex(graph, cap(g));
    auto resolve = [&](const std::string& spec) {
        std::vector<sx::VertexId> ids;
        for (const auto& name : split(spec, ',')) {
            const auto& labels = graph.labels();
            auto it = std::find(labels.begin(), labels.end(), name);
            if (it == labels.end()) throw sx::InputError("unknown vertex '" + name + "'");
            ids.push_back(static_cast<sx::VertexId>(it - labels.begin()));
        }
        return sx::Simplex(ids);
    };
    const auto a = resolve(from);
    const auto b = resolve(to);
    const auto adj = sx::level_adjacency(complex, a.dimension());
    const auto walk = sx::witness_walk(complex, adj, a, b);
    if (!walk) {
        std::cout << "unreachable\n";
        return kOk;
    }
    std::cout << sx::format_walk(*walk, graph.labels()) << '\n';
    return kOk;
}

int cmd_compare(const std::string& path, const std::string& measure_name, std::size_t top) {
    const auto run = sx::read_report(path);
    const auto measure = sx::parse_measure(measure_name);
    std::vector<sx::Ranking> rankings;
    for (const auto& lr : run.levels)
        if (auto it = lr.measures.find(measure); it != lr.measures.end()) rankings.push_back(it->second);
    const auto rep = sx::cross_level_report(rankings, top);
    const auto& names = run.vertices;
    std::cout << "measure " << measure_name << ", top " << top << '\n';
    for (const auto& row : rep.lift) {
        std::cout << "k=" << row.k << " rank " << row.rank << ' ' << sx::format_simplex(row.simplex, names)
                  << " score " << sx::format_score(row.score) << " | vertex ranks:";
        for (const auto& [v, rank] : row.vertex_ranks)
            std::cout << ' ' << names.at(v) << '=' << (rank ? std::to_string(*rank) : "-");
        std::cout << '\n';
    }
    for (const auto& a : rep.agreement) {
        std::cout << "agreement k=" << a.k_low << " vs k=" << a.k_high << ": shared " << a.shared_vertices
                  << ", comparable pairs " << a.comparable_pairs << ", concordance ";
        if (auto f = a.fraction()) std::cout << sx::format_score(*f);
        else std::cout << "n/a";
        std::cout << '\n';
    }
    return kOk;
}

int cmd_plot(const std::string& path, const std::string& out_dir) {
    const auto run = sx::read_report(path);
    const auto files = sx::emit_plots(run, out_dir);
    if (files.empty()) std::cerr << "warning: report has no scored levels; nothing plotted\n";
    for (const auto& f : files) std::cout << f.string() << '\n';
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    sx::thread_limit_from_env();
    CLI::App app{"Clique complexes and simplicial centrality for network data"};
    app.require_subcommand(1);

    GraphOptions gopts;
    std::string input, expect, report, out, measure = "degree", levels_arg,
                                          measures_arg = "degree,closeness,betweenness,eigenvector,subgraph",
                                          csv_dir, dump_dir, name, walk_from, walk_to;
    bool all_levels = false;
    double tol = 1e-10;
    std::size_t max_iter = 100000, top = 5;

    auto* cliques = app.add_subcommand("cliques", "Print the clique census of a matrix");
    cliques->add_option("matrix", input, "Adjacency matrix CSV")->required();
    cliques->add_option("--expect", expect, "JSON sidecar of expected counts to check against");
    add_graph_options(cliques, gopts);

    auto* conn = app.add_subcommand("connectivity", "Connectivity of the clique complex per level");
    conn->add_option("matrix", input, "Adjacency matrix CSV")->required();
    conn->add_flag("--all-levels", all_levels, "Report every level up to the complex dimension");
    add_graph_options(conn, gopts);

    auto* analyze = app.add_subcommand("analyze", "Full per-level centrality analysis");
    analyze->add_option("matrix", input, "Adjacency matrix CSV")->required();
    analyze->add_option("--levels", levels_arg, "Comma-separated levels (default 0,1,2)");
    analyze->add_flag("--all-levels", all_levels, "Analyze every level up to the complex dimension");
    analyze->add_option("--measures", measures_arg, "Comma-separated measures");
    analyze->add_option("--tol", tol, "Eigenvector residual tolerance")->check(CLI::PositiveNumber);
    analyze->add_option("--max-iter", max_iter, "Power-iteration cap");
    analyze->add_option("--top", top, "Top-N simplices in the cross-level table");
    analyze->add_option("--name", name, "Network name (default: file stem)");
    analyze->add_option("--out", out, "Report JSON path")->required();
    analyze->add_option("--csv-dir", csv_dir, "Also write per-(level, measure) CSV files here");
    analyze->add_option("--dump-matrices", dump_dir, "Write level matrices and index bases here");
    add_graph_options(analyze, gopts);

    auto* compare = app.add_subcommand("compare", "Cross-level ranking comparison from a report");
    compare->add_option("report", report, "Report JSON")->required();
    compare->add_option("--measure", measure, "Measure to compare");
    compare->add_option("--top", top, "Top-N simplices per level");

    auto* plot = app.add_subcommand("plot", "Write SVG charts from a report");
    plot->add_option("report", report, "Report JSON")->required();
    plot->add_option("--out", out, "Output directory")->required();

    auto* walk = app.add_subcommand("walk", "Print a shortest simplicial walk between two simplices");
    walk->add_option("matrix", input, "Adjacency matrix CSV")->required();
    walk->add_option("--from", walk_from, "Comma-separated vertex labels")->required();
    walk->add_option("--to", walk_to, "Comma-separated vertex labels")->required();
    add_graph_options(walk, gopts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*cliques) return cmd_cliques(input, gopts, expect);
        if (*conn) return cmd_connectivity(input, gopts, all_levels);
        if (*walk) return cmd_walk(input, gopts, walk_from, walk_to);
        if (*compare) return cmd_compare(report, measure, top);
        if (*plot) return cmd_plot(report, out);
        if (*analyze) {
            sx::AnalysisOptions opts;
            opts.keep_isolated = gopts.keep_isolated;
            opts.max_dim = cap(gopts);
            opts.all_levels = all_levels;
            opts.tol = tol;
            opts.max_iter = max_iter;
            opts.top_n = top;
            for (const auto& l : split(levels_arg, ',')) {
                try {
                    opts.levels.push_back(std::stoi(l));
                } catch (const std::exception&) {
                    throw sx::InputError("bad level '" + l + "'");
                }
            }
            opts.measures.clear();
            for (const auto& m : split(measures_arg, ',')) opts.measures.push_back(sx::parse_measure(m));

            const auto raw = load(input);
            const std::string network = name.empty() ? std::filesystem::path(input).stem().string() : name;
            const auto run = sx::run_analysis(raw, opts, network, file_digest(input));
            for (const auto& w : run.warnings)
                if (std::find(raw.warnings.begin(), raw.warnings.end(), w) == raw.warnings.end())
                    std::cerr << "warning: " << w << '\n';
            sx::write_report(run, sx::ReportFormat::json, out);
            if (!csv_dir.empty()) sx::write_report(run, sx::ReportFormat::csv, csv_dir);
            if (!dump_dir.empty()) {
                std::filesystem::create_directories(dump_dir);
                const auto graph = sx::normalize_graph(raw, opts.keep_isolated);
                const auto complex = sx::clique_complex(graph, opts.max_dim);
                for (const auto& lr : run.levels) {
                    if (lr.simplex_count == 0) continue;
                    const auto adj = sx::level_adjacency(complex, lr.k);
                    const std::filesystem::path dir(dump_dir);
                    const auto basis = dir / ("k" + std::to_string(lr.k) + "_basis.txt");
                    sx::write_level_matrix(dir / ("k" + std::to_string(lr.k) + "_combined.csv"), basis,
                                           adj.combined, adj.simplices, graph.labels());
                    sx::write_level_matrix(dir / ("k" + std::to_string(lr.k) + "_upper.csv"), basis,
                                           adj.upper, adj.simplices, graph.labels());
                    if (adj.lower)
                        sx::write_level_matrix(dir / ("k" + std::to_string(lr.k) + "_lower.csv"), basis,
                                               *adj.lower, adj.simplices, graph.labels());
                }
            }
            std::cout << "wrote " << out << '\n';
            return kOk;
        }
    } catch (const sx::NumericalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNonConvergence;
    } catch (const sx::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const sx::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
