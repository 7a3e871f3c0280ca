#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sx/sx.hpp"

namespace fixtures {

inline sx::Graph labeled_graph(std::vector<std::string> labels,
                               const std::vector<std::pair<std::string, std::string>>& edges) {
    sx::Graph g(labels);
    auto id = [&](const std::string& name) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == name) return static_cast<sx::VertexId>(i);
        throw std::invalid_argument("no vertex " + name);
    };
    for (const auto& [a, b] : edges) g.add_edge(id(a), id(b));
    return g;
}

/// The connected graph whose clique complex is disconnected at level 1:
/// V = {a..f}, E = {ab, ac, ad, bc, cd, df, fe, de}.
inline sx::Graph triangle_chain() {
    return labeled_graph({"a", "b", "c", "d", "e", "f"},
                         {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"c", "d"}, {"d", "f"},
                          {"f", "e"}, {"d", "e"}});
}

inline sx::Graph complete_graph(std::size_t n) {
    auto g = sx::Graph::unlabeled(n);
    for (sx::VertexId u = 0; u < n; ++u)
        for (sx::VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// Path 0 - 1 - ... - (n-1).
inline sx::Graph path_graph(std::size_t n) {
    auto g = sx::Graph::unlabeled(n);
    for (sx::VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

/// Simplex named by comma-free vertex labels, e.g. "acd".
inline sx::Simplex by_labels(const sx::SimplicialComplex& c, const std::string& names) {
    std::vector<sx::VertexId> ids;
    for (char ch : names) {
        const auto& labels = c.labels();
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == std::string(1, ch)) ids.push_back(static_cast<sx::VertexId>(i));
    }
    return sx::Simplex(ids);
}

inline std::size_t index_of(const sx::SimplicialComplex& c, const std::string& names) {
    return c.find(by_labels(c, names)).value();
}

} // namespace fixtures
