#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sx/analysis.hpp"

namespace sx {

namespace detail {

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << body;
    if (!out) throw IoError("failed writing " + path.string());
}

inline std::string fixed(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << v;
    return os.str();
}

// Bars in ranking order, heights scaled to the largest score.
inline std::string bar_chart_svg(const Ranking& r, const std::vector<std::string>& names,
                                 const std::string& title) {
    constexpr double bar = 18.0, gap = 4.0, left = 60.0, top = 40.0, height = 240.0;
    const std::size_t n = r.entries.size();
    const double width = left + 20.0 + static_cast<double>(n) * (bar + gap);
    double max_score = 0.0;
    for (const auto& e : r.entries) max_score = std::max(max_score, e.score);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width) << "\" height=\""
        << fixed(top + height + 120.0) << "\">\n";
    svg << "<text x=\"" << fixed(left) << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
        << xml_escape(title) << "</text>\n";
    svg << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top + height) << "\" x2=\"" << fixed(width - 10.0)
        << "\" y2=\"" << fixed(top + height) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"4\" y=\"" << fixed(top + 10.0) << "\" font-family=\"sans-serif\" font-size=\"10\">"
        << format_score(max_score) << "</text>\n";
    for (std::size_t i = 0; i < n; ++i) {
        const auto& e = r.entries[i];
        const double h = max_score > 0.0 ? height * e.score / max_score : 0.0;
        const double x = left + 4.0 + static_cast<double>(i) * (bar + gap);
        svg << "<rect x=\"" << fixed(x) << "\" y=\"" << fixed(top + height - h) << "\" width=\"" << fixed(bar)
            << "\" height=\"" << fixed(h) << "\" fill=\"steelblue\"><title>"
            << xml_escape(format_simplex(e.simplex, names)) << " = " << format_score(e.score) << " (rank "
            << e.rank << ")</title></rect>\n";
        svg << "<text transform=\"translate(" << fixed(x + bar * 0.7) << "," << fixed(top + height + 6.0)
            << ") rotate(60)\" font-family=\"sans-serif\" font-size=\"9\">"
            << xml_escape(format_simplex(e.simplex, names)) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

// One polyline per level: normalized score against ranking position.
inline std::string comparison_svg(const std::vector<const Ranking*>& rankings, const std::string& title) {
    constexpr double left = 60.0, top = 40.0, width = 520.0, height = 260.0;
    static const char* colors[] = {"steelblue", "darkorange", "seagreen", "crimson", "purple", "gray"};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(left + width + 140.0)
        << "\" height=\"" << fixed(top + height + 50.0) << "\">\n";
    svg << "<text x=\"" << fixed(left) << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
        << xml_escape(title) << "</text>\n";
    svg << "<rect x=\"" << fixed(left) << "\" y=\"" << fixed(top) << "\" width=\"" << fixed(width)
        << "\" height=\"" << fixed(height) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (std::size_t li = 0; li < rankings.size(); ++li) {
        const auto& r = *rankings[li];
        double max_score = 0.0;
        for (const auto& e : r.entries) max_score = std::max(max_score, e.score);
        const std::size_t n = r.entries.size();
        svg << "<polyline fill=\"none\" stroke=\"" << colors[li % 6] << "\" points=\"";
        for (std::size_t i = 0; i < n; ++i) {
            const double x = left + (n > 1 ? width * static_cast<double>(i) / static_cast<double>(n - 1) : 0.0);
            const double y = top + height - (max_score > 0.0 ? height * r.entries[i].score / max_score : 0.0);
            svg << (i ? " " : "") << fixed(x) << ',' << fixed(y);
        }
        svg << "\"/>\n";
        svg << "<text x=\"" << fixed(left + width + 10.0) << "\" y=\"" << fixed(top + 16.0 * static_cast<double>(li + 1))
            << "\" fill=\"" << colors[li % 6] << "\" font-family=\"sans-serif\" font-size=\"12\">" << r.k
            << "-simplices (" << n << ")</text>\n";
    }
    svg << "<text x=\"" << fixed(left) << "\" y=\"" << fixed(top + height + 30.0)
        << "\" font-family=\"sans-serif\" font-size=\"11\">ranking position (scaled) vs score / level maximum</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace detail

/// Writes `k<level>_<measure>.svg` for every scored (level, measure), a
/// `compare_<measure>.svg` per measure, and the CSV data behind them.
/// An empty run writes nothing and returns no files.
inline std::vector<std::filesystem::path> emit_plots(const AnalysisRun& run, const std::filesystem::path& out_dir) {
    std::vector<std::filesystem::path> written;
    bool any = false;
    for (const auto& lr : run.levels) any = any || !lr.measures.empty();
    if (!any) return written;

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

    std::map<Measure, std::vector<const Ranking*>> by_measure;
    for (const auto& lr : run.levels)
        for (const auto& [m, ranking] : lr.measures) {
            const std::string stem = "k" + std::to_string(lr.k) + "_" + std::string(to_string(m));
            const std::string title = (run.network.empty() ? "" : run.network + ": ") + std::string(to_string(m)) +
                                      " centrality, " + std::to_string(lr.k) + "-simplices";
            const auto svg = out_dir / (stem + ".svg");
            detail::write_text_file(svg, detail::bar_chart_svg(ranking, run.vertices, title));
            written.push_back(svg);
            by_measure[m].push_back(&ranking);
        }
    for (const auto& [m, rankings] : by_measure) {
        const std::string name(to_string(m));
        const auto svg = out_dir / ("compare_" + name + ".svg");
        detail::write_text_file(svg, detail::comparison_svg(rankings, "Ranking comparison across levels: " + name));
        written.push_back(svg);
    }
    for (const auto& csv : write_report_csv(run, out_dir)) written.push_back(csv);
    return written;
}

} // namespace sx
