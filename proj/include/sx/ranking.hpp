#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sx/centrality.hpp"
#include "sx/simplex.hpp"

namespace sx {

struct RankEntry {
    std::size_t index = 0; // position in the level's simplex basis
    Simplex simplex;
    double score = 0.0;
    std::size_t rank = 0; // dense, 1 = best
    std::uint8_t flags = kNoFlags;

    friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

struct Ranking {
    int k = 0;
    Measure measure = Measure::degree;
    std::vector<RankEntry> entries; // best first; equal scores listed lexicographically

    friend bool operator==(const Ranking&, const Ranking&) = default;
};

/// Dense ranking by non-increasing score.
///
/// Scores within `tie_tolerance` (relative to the larger magnitude) of the
/// first score of the current tie group share its rank; 0 means exact ties.
inline Ranking rank_simplices(const CentralityScores& scores, std::span<const Simplex> simplices,
                              double tie_tolerance = 0.0) {
    if (simplices.size() != scores.values.size())
        throw InputError("scores and simplex basis differ in size");
    Ranking r;
    r.k = scores.k;
    r.measure = scores.measure;
    std::vector<std::size_t> order(simplices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores.values[a] > scores.values[b];
    });

    std::size_t rank = 0;
    double group_score = 0.0;
    std::vector<RankEntry> group;
    auto flush = [&] {
        std::sort(group.begin(), group.end(),
                  [](const RankEntry& a, const RankEntry& b) { return a.simplex < b.simplex; });
        for (auto& e : group) r.entries.push_back(std::move(e));
        group.clear();
    };
    for (std::size_t i : order) {
        const double v = scores.values[i];
        const double scale = std::max({1.0, std::abs(v), std::abs(group_score)});
        const bool tied = !group.empty() && std::abs(group_score - v) <= tie_tolerance * scale;
        if (!tied) {
            flush();
            ++rank;
            group_score = v;
        }
        group.push_back(RankEntry{i, simplices[i], v, rank, scores.flags[i]});
    }
    flush();
    return r;
}

/// For one top-ranked k-simplex, the level-0 ranks of its vertices.
struct LiftRow {
    int k = 0;
    Simplex simplex;
    std::size_t rank = 0;
    double score = 0.0;
    std::vector<std::pair<VertexId, std::optional<std::size_t>>> vertex_ranks;

    friend bool operator==(const LiftRow&, const LiftRow&) = default;
};

/// Pairwise concordance of two levels' vertex orderings.
///
/// A vertex's rank at level k is the best rank of any k-simplex containing
/// it. Over vertices present at both levels, a pair is comparable when it is
/// strictly ordered at both levels, and concordant when the orders agree.
struct LevelAgreement {
    int k_low = 0;
    int k_high = 0;
    std::size_t shared_vertices = 0;
    std::size_t comparable_pairs = 0;
    std::size_t concordant_pairs = 0;

    std::optional<double> fraction() const {
        if (comparable_pairs == 0) return std::nullopt;
        return static_cast<double>(concordant_pairs) / static_cast<double>(comparable_pairs);
    }

    friend bool operator==(const LevelAgreement&, const LevelAgreement&) = default;
};

struct CrossLevelReport {
    Measure measure = Measure::degree;
    std::size_t top_n = 0;
    std::vector<LiftRow> lift;
    std::vector<LevelAgreement> agreement;

    friend bool operator==(const CrossLevelReport&, const CrossLevelReport&) = default;
};

/// Best rank per vertex among the ranked simplices containing it.
inline std::map<VertexId, std::size_t> vertex_best_ranks(const Ranking& r) {
    std::map<VertexId, std::size_t> best;
    for (const auto& e : r.entries)
        for (VertexId v : e.simplex.vertices()) {
            auto [it, inserted] = best.emplace(v, e.rank);
            if (!inserted) it->second = std::min(it->second, e.rank);
        }
    return best;
}

inline LevelAgreement level_agreement(const Ranking& low, const Ranking& high) {
    LevelAgreement a;
    a.k_low = low.k;
    a.k_high = high.k;
    const auto rl = vertex_best_ranks(low);
    const auto rh = vertex_best_ranks(high);
    std::vector<std::pair<std::size_t, std::size_t>> shared;
    for (const auto& [v, rank] : rl)
        if (auto it = rh.find(v); it != rh.end()) shared.emplace_back(rank, it->second);
    a.shared_vertices = shared.size();
    for (std::size_t i = 0; i < shared.size(); ++i)
        for (std::size_t j = i + 1; j < shared.size(); ++j) {
            const auto [li, hi] = shared[i];
            const auto [lj, hj] = shared[j];
            if (li == lj || hi == hj) continue;
            ++a.comparable_pairs;
            if ((li < lj) == (hi < hj)) ++a.concordant_pairs;
        }
    return a;
}

/// Lift table for the top `top_n` simplices at every level k >= 1 against
/// level 0 (simplices tied with the last one kept are included), plus
/// agreement statistics for every pair of supplied levels.
/// Rankings must all be for the same measure.
inline CrossLevelReport cross_level_report(std::span<const Ranking> rankings, std::size_t top_n) {
    CrossLevelReport out;
    out.top_n = top_n;
    if (rankings.empty()) return out;
    out.measure = rankings.front().measure;
    for (const auto& r : rankings)
        if (r.measure != out.measure) throw InputError("cross-level report mixes measures");

    const Ranking* base = nullptr;
    for (const auto& r : rankings)
        if (r.k == 0) base = &r;

    if (base && rankings.size() > 1) {
        std::map<VertexId, std::size_t> vertex_rank;
        for (const auto& e : base->entries) vertex_rank[e.simplex[0]] = e.rank;
        for (const auto& r : rankings) {
            if (r.k == 0) continue;
            const std::size_t cut = std::min(top_n, r.entries.size());
            if (cut == 0) continue;
            const std::size_t last_rank = r.entries[cut - 1].rank;
            for (const auto& e : r.entries) {
                if (e.rank > last_rank) break;
                LiftRow row{r.k, e.simplex, e.rank, e.score, {}};
                for (VertexId v : e.simplex.vertices()) {
                    auto it = vertex_rank.find(v);
                    row.vertex_ranks.emplace_back(
                        v, it == vertex_rank.end() ? std::nullopt : std::optional(it->second));
                }
                out.lift.push_back(std::move(row));
            }
        }
    }
    for (std::size_t i = 0; i < rankings.size(); ++i)
        for (std::size_t j = i + 1; j < rankings.size(); ++j) {
            const auto& a = rankings[i];
            const auto& b = rankings[j];
            out.agreement.push_back(a.k <= b.k ? level_agreement(a, b) : level_agreement(b, a));
        }
    return out;
}

} // namespace sx
