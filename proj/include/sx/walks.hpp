#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "sx/adjacency.hpp"
#include "sx/parallel.hpp"

namespace sx {

/// Hop count between two k-simplices: the number of connecting (k-1)-faces
/// in a shortest walk, so a simplex is at distance 0 from itself.
using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Breadth-first distances from `source` over the combined matrix.
inline std::vector<Distance> shortest_distances(const BooleanMatrix& m, std::size_t source) {
    if (source >= m.size()) throw InputError("source index out of range");
    std::vector<Distance> dist(m.size(), kUnreachable);
    std::queue<std::size_t> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const std::size_t v = frontier.front();
        frontier.pop();
        for (auto w : m.row(v))
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                frontier.push(w);
            }
    }
    return dist;
}

inline std::vector<Distance> shortest_distances(const LevelAdjacency& adj, std::size_t source) {
    return shortest_distances(adj.combined, source);
}

class DistanceTable {
public:
    DistanceTable() = default;
    DistanceTable(int k, std::size_t n) : k_(k), n_(n), data_(n * n, kUnreachable) {}

    int level() const noexcept { return k_; }
    std::size_t size() const noexcept { return n_; }

    Distance operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    Distance& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

    bool reachable(std::size_t i, std::size_t j) const { return (*this)(i, j) != kUnreachable; }

    std::span<const Distance> row(std::size_t i) const {
        return std::span<const Distance>(data_).subspan(i * n_, n_);
    }

    friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

private:
    int k_ = 0;
    std::size_t n_ = 0;
    std::vector<Distance> data_;
};

inline DistanceTable all_pairs_distances(const LevelAdjacency& adj) {
    DistanceTable table(adj.k, adj.size());
    parallel_for(adj.size(), [&](std::size_t s) {
        const auto d = shortest_distances(adj.combined, s);
        for (std::size_t t = 0; t < d.size(); ++t) table(s, t) = d[t];
    });
    return table;
}

/// Alternating sequence σ1, α1, σ2, ..., σn of k-simplices and connecting
/// (k-1)-faces. For k = 0 the walk is an ordinary graph walk and carries no
/// connectors.
struct WalkSequence {
    int k = 0;
    std::vector<Simplex> simplices;
    std::vector<Simplex> connectors;

    std::size_t length() const noexcept { return simplices.empty() ? 0 : simplices.size() - 1; }
};

/// A shortest walk from `from` to `to` at their common level, or nullopt if
/// unreachable.
///
/// At each step the next simplex is the smallest index one hop closer to the
/// target, and each connector is the lexicographically least common
/// (k-1)-face of its neighbours.
inline std::optional<WalkSequence> witness_walk(const SimplicialComplex& c,
                                                const LevelAdjacency& adj, const Simplex& from,
                                                const Simplex& to) {
    if (from.dimension() != to.dimension())
        throw InputError("walk endpoints must be simplices of the same level");
    if (from.dimension() != adj.k) throw InputError("walk endpoints are not at the matrix level");
    const auto src = c.find(from);
    const auto dst = c.find(to);
    if (!src || !dst) throw InputError("walk endpoint is not in the complex");

    const auto to_target = shortest_distances(adj.combined, *dst);
    if (to_target[*src] == kUnreachable) return std::nullopt;

    WalkSequence walk;
    walk.k = adj.k;
    std::size_t at = *src;
    walk.simplices.push_back(adj.simplices[at]);
    while (at != *dst) {
        std::size_t next = at;
        for (auto w : adj.combined.row(at))
            if (to_target[w] + 1 == to_target[at]) {
                next = w;
                break;
            }
        if (adj.k > 0) {
            const auto& a = adj.simplices[at];
            const auto& b = adj.simplices[next];
            const auto fa = facets(a);
            for (const auto& f : fa)
                if (f.is_face_of(b)) {
                    walk.connectors.push_back(f);
                    break;
                }
        }
        at = next;
        walk.simplices.push_back(adj.simplices[at]);
    }
    return walk;
}

/// One-line rendering: "{a,b} via {b} {b,c}".
inline std::string format_walk(const WalkSequence& walk, std::span<const std::string> names = {}) {
    std::string out;
    for (std::size_t i = 0; i < walk.simplices.size(); ++i) {
        if (i) {
            out += ' ';
            if (i - 1 < walk.connectors.size())
                out += "via " + format_simplex(walk.connectors[i - 1], names) + ' ';
        }
        out += format_simplex(walk.simplices[i], names);
    }
    return out;
}

} // namespace sx
