#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sx/error.hpp"
#include "sx/graph.hpp"
#include "sx/simplex.hpp"

namespace sx {

/// A finite family of simplices grouped by dimension.
///
/// Each level is kept sorted lexicographically with no duplicates, so the
/// position of a simplex inside its level is a stable index used by every
/// level-k matrix. Complexes built through `clique_complex` or `closure` are
/// downward closed; `from_simplices` stores exactly what it is given, which
/// lets callers represent (and detect) non-closed families.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_simplices(std::vector<Simplex> simplices,
                                            std::vector<std::string> labels = {}) {
        SimplicialComplex c;
        c.labels_ = std::move(labels);
        for (auto& s : simplices) {
            const auto k = static_cast<std::size_t>(s.dimension());
            if (c.levels_.size() <= k) c.levels_.resize(k + 1);
            c.levels_[k].push_back(std::move(s));
        }
        c.normalize();
        return c;
    }

    /// Smallest downward-closed complex containing `simplices`.
    static SimplicialComplex closure(std::vector<Simplex> simplices,
                                     std::vector<std::string> labels = {}) {
        std::vector<Simplex> all;
        for (const auto& s : simplices) {
            auto f = faces(s);
            all.insert(all.end(), f.begin(), f.end());
            all.push_back(s);
        }
        return from_simplices(std::move(all), std::move(labels));
    }

    /// Largest k with a stored k-simplex; -1 for the empty complex.
    int dim() const noexcept { return static_cast<int>(levels_.size()) - 1; }

    std::span<const Simplex> level(int k) const {
        if (k < 0 || k > dim()) return {};
        return levels_[static_cast<std::size_t>(k)];
    }

    std::size_t count(int k) const { return level(k).size(); }

    std::size_t total_count() const {
        std::size_t n = 0;
        for (const auto& l : levels_) n += l.size();
        return n;
    }

    /// Index of `s` within its level.
    std::optional<std::size_t> find(const Simplex& s) const {
        auto lvl = level(s.dimension());
        auto it = std::lower_bound(lvl.begin(), lvl.end(), s);
        if (it == lvl.end() || *it != s) return std::nullopt;
        return static_cast<std::size_t>(it - lvl.begin());
    }

    bool contains(const Simplex& s) const { return find(s).has_value(); }

    /// One past the largest vertex id mentioned by any stored simplex.
    std::size_t vertex_bound() const {
        std::size_t bound = 0;
        for (const auto& l : levels_)
            for (const auto& s : l) bound = std::max<std::size_t>(bound, s.vertices().back() + 1);
        return bound;
    }

    /// Vertex names, indexed by vertex id. May be empty.
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::string name(const Simplex& s) const { return format_simplex(s, labels_); }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.levels_ == b.levels_;
    }

private:
    void normalize() {
        for (auto& l : levels_) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
        while (!levels_.empty() && levels_.back().empty()) levels_.pop_back();
    }

    std::vector<std::vector<Simplex>> levels_;
    std::vector<std::string> labels_;
};

namespace detail {

inline std::vector<VertexId> intersect_sorted(const std::vector<VertexId>& a,
                                              const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Bron-Kerbosch with Tomita pivoting: the pivot maximizes |P ∩ N(u)| over P ∪ X.
inline void bron_kerbosch(const Graph& g, std::vector<VertexId>& r, std::vector<VertexId> p,
                          std::vector<VertexId> x, std::vector<std::vector<VertexId>>& out) {
    if (p.empty()) {
        if (x.empty()) {
            auto clique = r;
            std::sort(clique.begin(), clique.end());
            out.push_back(std::move(clique));
        }
        return;
    }
    VertexId pivot = p.front();
    std::size_t best = 0;
    bool first = true;
    for (const auto* set : {&p, &x}) {
        for (VertexId u : *set) {
            const auto& nu = g.neighbors(u);
            std::size_t cover = 0;
            for (VertexId v : p)
                if (std::binary_search(nu.begin(), nu.end(), v)) ++cover;
            if (first || cover > best) {
                pivot = u;
                best = cover;
                first = false;
            }
        }
    }
    std::vector<VertexId> candidates;
    const auto& np = g.neighbors(pivot);
    std::set_difference(p.begin(), p.end(), np.begin(), np.end(), std::back_inserter(candidates));

    for (VertexId v : candidates) {
        const auto& nv = g.neighbors(v);
        r.push_back(v);
        bron_kerbosch(g, r, intersect_sorted(p, nv), intersect_sorted(x, nv), out);
        r.pop_back();
        p.erase(std::lower_bound(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

// Appends every subset of `clique` with size in [1, max_size] to the per-size buckets.
inline void expand_subsets(const std::vector<VertexId>& clique, std::size_t max_size,
                           std::vector<std::vector<Simplex>>& buckets) {
    std::vector<VertexId> current;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (!current.empty()) buckets[current.size() - 1].push_back(Simplex::from_sorted(current));
        if (current.size() == max_size) return;
        for (std::size_t i = start; i < clique.size(); ++i) {
            current.push_back(clique[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
}

} // namespace detail

/// All maximal cliques of `g`, each sorted, in lexicographic order.
inline std::vector<std::vector<VertexId>> maximal_cliques(const Graph& g) {
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> r, p(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) p[v] = v;
    detail::bron_kerbosch(g, r, std::move(p), {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Size of the largest clique; 0 for the empty graph.
inline std::size_t clique_number(const Graph& g) {
    std::size_t best = 0;
    for (const auto& c : maximal_cliques(g)) best = std::max(best, c.size());
    return best;
}

/// The clique complex X(g): one (s-1)-simplex per s-clique of `g`.
///
/// With `max_dim`, only simplices of dimension <= max_dim are generated, which
/// is the max_dim-skeleton of X(g) built without enumerating larger faces.
inline SimplicialComplex clique_complex(const Graph& g, std::optional<int> max_dim = std::nullopt) {
    if (max_dim && *max_dim < 1) throw InputError("max_dim must be at least 1");
    const auto cliques = maximal_cliques(g);
    std::size_t largest = 0;
    for (const auto& c : cliques) largest = std::max(largest, c.size());
    const std::size_t cap =
        max_dim ? std::min<std::size_t>(largest, static_cast<std::size_t>(*max_dim) + 1) : largest;

    std::vector<std::vector<Simplex>> buckets(cap);
    for (const auto& c : cliques) detail::expand_subsets(c, cap, buckets);

    std::vector<Simplex> all;
    for (auto& b : buckets)
        for (auto& s : b) all.push_back(std::move(s));
    return SimplicialComplex::from_simplices(std::move(all), g.labels());
}

/// True iff every nonempty proper face of every stored simplex is stored.
/// Checking facets level by level is sufficient: faces of faces are faces.
inline bool validate_closure(const SimplicialComplex& c) {
    for (int k = 1; k <= c.dim(); ++k)
        for (const auto& s : c.level(k))
            for (const auto& f : facets(s))
                if (!c.contains(f)) return false;
    return true;
}

/// The (dim(s)-1)-faces of a stored simplex.
inline std::vector<Simplex> boundary_facets(const SimplicialComplex& c, const Simplex& s) {
    if (!c.contains(s)) throw InputError("simplex " + c.name(s) + " is not in the complex");
    return facets(s);
}

/// All simplices of dimension <= p.
inline SimplicialComplex p_skeleton(const SimplicialComplex& c, int p) {
    if (p < 0) throw InputError("skeleton dimension must be nonnegative");
    std::vector<Simplex> kept;
    for (int k = 0; k <= std::min(p, c.dim()); ++k)
        kept.insert(kept.end(), c.level(k).begin(), c.level(k).end());
    return SimplicialComplex::from_simplices(std::move(kept), c.labels());
}

/// Image of `c` under the vertex map v -> perm[v].
///
/// `perm` must be a permutation of 0..vertex_bound()-1. Labels travel with
/// their vertices, so the new vertex perm[v] carries the old label of v.
inline SimplicialComplex relabel(const SimplicialComplex& c, std::span<const VertexId> perm) {
    const std::size_t n = c.vertex_bound();
    if (perm.size() != n) throw InputError("permutation size does not match the vertex set");
    std::vector<bool> hit(n, false);
    for (VertexId v : perm) {
        if (v >= n || hit[v]) throw InputError("vertex map is not a bijection");
        hit[v] = true;
    }
    std::vector<std::string> labels;
    if (!c.labels().empty()) {
        labels.resize(c.labels().size());
        for (std::size_t v = 0; v < n && v < c.labels().size(); ++v) labels[perm[v]] = c.labels()[v];
    }
    std::vector<Simplex> mapped;
    for (int k = 0; k <= c.dim(); ++k)
        for (const auto& s : c.level(k)) {
            std::vector<VertexId> v;
            for (VertexId u : s.vertices()) v.push_back(perm[u]);
            mapped.emplace_back(std::move(v));
        }
    return SimplicialComplex::from_simplices(std::move(mapped), std::move(labels));
}

} // namespace sx
