#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sx/boolean_matrix.hpp"
#include "sx/complex.hpp"
#include "sx/error.hpp"

namespace sx {

/// The three level-k matrices over a common simplex index basis.
///
/// For k >= 1, combined = lower AND NOT upper. For k = 0 lower adjacency is
/// undefined and combined = upper, i.e. the graph adjacency of the 1-skeleton.
struct LevelAdjacency {
    int k = 0;
    std::vector<Simplex> simplices;
    std::optional<BooleanMatrix> lower;
    BooleanMatrix upper;
    BooleanMatrix combined;

    std::size_t size() const noexcept { return simplices.size(); }
};

namespace detail {

inline void require_level(const SimplicialComplex& c, int k) {
    if (k < 0) throw InputError("level must be nonnegative");
    if (c.count(k) == 0)
        throw InputError("complex has no " + std::to_string(k) + "-simplices");
}

} // namespace detail

/// Pairs of distinct k-simplices sharing a (k-1)-face, i.e. |a ∩ b| = k.
inline BooleanMatrix lower_adjacency(const SimplicialComplex& c, int k) {
    if (k == 0) throw InputError("lower adjacency of 0-simplices is not defined");
    detail::require_level(c, k);
    const auto level = c.level(k);

    // Group k-simplices by each of their facets; a shared facet links every pair in the group.
    std::vector<std::pair<Simplex, BooleanMatrix::Index>> incidence;
    for (std::size_t i = 0; i < level.size(); ++i)
        for (auto& f : facets(level[i]))
            incidence.emplace_back(std::move(f), static_cast<BooleanMatrix::Index>(i));
    std::sort(incidence.begin(), incidence.end());

    std::vector<std::pair<BooleanMatrix::Index, BooleanMatrix::Index>> pairs;
    for (std::size_t lo = 0; lo < incidence.size();) {
        std::size_t hi = lo;
        while (hi < incidence.size() && incidence[hi].first == incidence[lo].first) ++hi;
        for (std::size_t a = lo; a < hi; ++a)
            for (std::size_t b = a + 1; b < hi; ++b)
                pairs.emplace_back(incidence[a].second, incidence[b].second);
        lo = hi;
    }
    return BooleanMatrix::from_pairs(level.size(), pairs);
}

/// Pairs of distinct k-simplices that are both faces of one stored (k+1)-simplex.
inline BooleanMatrix upper_adjacency(const SimplicialComplex& c, int k) {
    detail::require_level(c, k);
    std::vector<std::pair<BooleanMatrix::Index, BooleanMatrix::Index>> pairs;
    for (const auto& cofacet : c.level(k + 1)) {
        std::vector<BooleanMatrix::Index> members;
        for (const auto& f : facets(cofacet))
            if (auto idx = c.find(f)) members.push_back(static_cast<BooleanMatrix::Index>(*idx));
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                pairs.emplace_back(members[a], members[b]);
    }
    return BooleanMatrix::from_pairs(c.count(k), pairs);
}

inline LevelAdjacency level_adjacency(const SimplicialComplex& c, int k) {
    detail::require_level(c, k);
    LevelAdjacency adj;
    adj.k = k;
    adj.simplices.assign(c.level(k).begin(), c.level(k).end());
    adj.upper = upper_adjacency(c, k);
    if (k == 0) {
        adj.combined = adj.upper;
    } else {
        adj.lower = lower_adjacency(c, k);
        adj.combined = adj.lower->minus(adj.upper);
    }
    return adj;
}

/// Row sums of the combined matrix: the number of k-simplices adjacent to each one.
inline std::vector<std::size_t> simplicial_degree(const LevelAdjacency& adj) {
    std::vector<std::size_t> deg(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) deg[i] = adj.combined.row_sum(i);
    return deg;
}

/// Connected components of the matrix's graph, each sorted, ordered by smallest member.
inline std::vector<std::vector<std::size_t>> components(const BooleanMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> label(n, n);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (label[root] != n) continue;
        const std::size_t id = out.size();
        out.emplace_back();
        label[root] = id;
        stack.push_back(root);
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (auto w : m.row(v))
                if (label[w] == n) {
                    label[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

/// Components of the level-k combined adjacency, plus the connectivity verdict.
///
/// A level holding a single simplex counts as connected.
struct LevelConnectivity {
    int k = 0;
    std::size_t simplex_count = 0;
    std::vector<std::vector<std::size_t>> components;
    std::vector<std::size_t> isolated; // zero rows of the combined matrix

    bool connected() const noexcept { return simplex_count > 0 && components.size() == 1; }
};

inline LevelConnectivity connectivity(const LevelAdjacency& adj) {
    LevelConnectivity out;
    out.k = adj.k;
    out.simplex_count = adj.size();
    out.components = components(adj.combined);
    for (std::size_t i = 0; i < adj.size(); ++i)
        if (adj.combined.row_sum(i) == 0) out.isolated.push_back(i);
    return out;
}

inline LevelConnectivity components_at_level(const SimplicialComplex& c, int k) {
    return connectivity(level_adjacency(c, k));
}

/// True iff no bipartition of the indices zeroes an off-diagonal block.
///
/// For a symmetric matrix that is exactly connectivity of its graph; a 1x1
/// matrix is irreducible and the empty matrix is not.
inline bool is_irreducible(const BooleanMatrix& m) {
    if (m.size() == 0) return false;
    return components(m).size() == 1;
}

} // namespace sx
