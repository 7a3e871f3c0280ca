#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sx/error.hpp"
#include "sx/simplex.hpp"

namespace sx {

/// Square labeled matrix as read from disk, before any graph normalization.
struct RawMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> entries; // row-major, labels.size() x labels.size()
    std::vector<std::string> warnings;
};

/// Simple undirected graph with contiguous vertex ids 0..n-1.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::vector<std::string> labels)
        : labels_(std::move(labels)), neighbors_(labels_.size()) {
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != labels_.size()) throw InputError("duplicate vertex labels");
    }

    /// Unlabeled graph; vertex i is named "i".
    static Graph unlabeled(std::size_t n) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        return Graph(std::move(labels));
    }

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(VertexId v) const { return labels_.at(v); }

    /// Returns false when the edge was already present.
    bool add_edge(VertexId u, VertexId v) {
        if (u >= vertex_count() || v >= vertex_count())
            throw InputError("edge endpoint is not a declared vertex");
        if (u == v) throw InputError("self-loops are not allowed in a simple graph");
        auto& nu = neighbors_[u];
        auto it = std::lower_bound(nu.begin(), nu.end(), v);
        if (it != nu.end() && *it == v) return false;
        nu.insert(it, v);
        auto& nv = neighbors_[v];
        nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
        ++edge_count_;
        return true;
    }

    bool has_edge(VertexId u, VertexId v) const {
        if (u >= vertex_count() || v >= vertex_count()) return false;
        const auto& nu = neighbors_[u];
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    /// Sorted neighbor list.
    const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_.at(v); }
    std::size_t degree(VertexId v) const { return neighbors_.at(v).size(); }

    /// Edges as (u, v) with u < v, lexicographically ordered.
    std::vector<std::pair<VertexId, VertexId>> edges() const {
        std::vector<std::pair<VertexId, VertexId>> out;
        for (VertexId u = 0; u < vertex_count(); ++u)
            for (VertexId v : neighbors_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<VertexId>> neighbors_;
    std::size_t edge_count_ = 0;
};

/// Symmetrizes a raw interaction matrix into a simple graph.
///
/// An edge {i,j} exists iff either raw[i][j] or raw[j][i] is nonzero and i != j.
/// Diagonal entries are dropped (edge deletion). Without `keep_isolated`,
/// degree-0 vertices are removed and the survivors renumbered in input order.
inline Graph normalize_graph(const RawMatrix& raw, bool keep_isolated = false) {
    const std::size_t n = raw.labels.size();
    if (n == 0) throw InputError("empty matrix");
    if (raw.entries.size() != n) throw InputError("matrix is not square");
    for (const auto& row : raw.entries)
        if (row.size() != n) throw InputError("matrix is not square");
    {
        std::set<std::string> seen(raw.labels.begin(), raw.labels.end());
        if (seen.size() != n) throw InputError("duplicate labels");
    }

    auto linked = [&](std::size_t i, std::size_t j) {
        return i != j && (raw.entries[i][j] != 0.0 || raw.entries[j][i] != 0.0);
    };

    std::vector<VertexId> new_id(n, 0);
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < n; ++i) {
        bool isolated = true;
        for (std::size_t j = 0; j < n && isolated; ++j)
            if (linked(i, j)) isolated = false;
        if (keep_isolated || !isolated) {
            new_id[i] = static_cast<VertexId>(kept.size());
            kept.push_back(raw.labels[i]);
        } else {
            new_id[i] = static_cast<VertexId>(-1);
        }
    }

    Graph g(std::move(kept));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (linked(i, j)) g.add_edge(new_id[i], new_id[j]);
    return g;
}

} // namespace sx
