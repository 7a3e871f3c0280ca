#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "sx/adjacency.hpp"
#include "sx/error.hpp"
#include "sx/parallel.hpp"
#include "sx/walks.hpp"

namespace sx {

enum class Measure { degree, closeness, betweenness, eigenvector, subgraph };

inline constexpr Measure kAllMeasures[] = {Measure::degree, Measure::closeness,
                                           Measure::betweenness, Measure::eigenvector,
                                           Measure::subgraph};

inline std::string_view to_string(Measure m) {
    switch (m) {
    case Measure::degree: return "degree";
    case Measure::closeness: return "closeness";
    case Measure::betweenness: return "betweenness";
    case Measure::eigenvector: return "eigenvector";
    case Measure::subgraph: return "subgraph";
    }
    return "?";
}

inline Measure parse_measure(std::string_view name) {
    for (Measure m : kAllMeasures)
        if (to_string(m) == name) return m;
    throw InputError("unknown centrality measure '" + std::string(name) + "'");
}

/// Per-simplex markers attached to scores.
enum ScoreFlag : std::uint8_t {
    kNoFlags = 0,
    kIsolated = 1 << 0,              // zero row in the combined matrix
    kUnreachableRestricted = 1 << 1, // closeness summed over a proper subset of the level
};

inline std::vector<std::string> flag_names(std::uint8_t flags) {
    std::vector<std::string> out;
    if (flags & kIsolated) out.emplace_back("ISOLATED");
    if (flags & kUnreachableRestricted) out.emplace_back("UNREACHABLE-RESTRICTED");
    return out;
}

inline std::uint8_t parse_flag(std::string_view name) {
    if (name == "ISOLATED") return kIsolated;
    if (name == "UNREACHABLE-RESTRICTED") return kUnreachableRestricted;
    throw InputError("unknown score flag '" + std::string(name) + "'");
}

/// Principal eigenpair found for one connected component.
struct ComponentEigenpair {
    std::size_t size = 0;
    double eigenvalue = 0.0;
    double residual = 0.0; // ||Ax - λx||_inf with max(x) = 1
    std::size_t iterations = 0;
};

struct CentralityScores {
    int k = 0;
    Measure measure = Measure::degree;
    std::vector<double> values;
    std::vector<std::uint8_t> flags;
    std::vector<ComponentEigenpair> eigenpairs; // eigenvector centrality only
};

namespace detail {

inline CentralityScores make_scores(const LevelAdjacency& adj, Measure m) {
    CentralityScores s;
    s.k = adj.k;
    s.measure = m;
    s.values.assign(adj.size(), 0.0);
    s.flags.assign(adj.size(), kNoFlags);
    for (std::size_t i = 0; i < adj.size(); ++i)
        if (adj.combined.row_sum(i) == 0) s.flags[i] |= kIsolated;
    return s;
}

} // namespace detail

inline CentralityScores degree_centrality(const LevelAdjacency& adj) {
    auto s = detail::make_scores(adj, Measure::degree);
    for (std::size_t i = 0; i < adj.size(); ++i)
        s.values[i] = static_cast<double>(adj.combined.row_sum(i));
    return s;
}

/// Reciprocal farness, summed over the simplices reachable from each one.
///
/// Simplices with no reachable peer score 0 (ISOLATED). When a level is
/// disconnected the sum runs over the simplex's own component and the score
/// is marked UNREACHABLE-RESTRICTED.
inline CentralityScores closeness_centrality(const LevelAdjacency& adj,
                                             const DistanceTable& dist) {
    if (dist.size() != adj.size() || dist.level() != adj.k)
        throw InputError("distance table does not match the adjacency level");
    auto s = detail::make_scores(adj, Measure::closeness);
    for (std::size_t i = 0; i < adj.size(); ++i) {
        std::uint64_t farness = 0;
        std::size_t reached = 0;
        for (std::size_t j = 0; j < adj.size(); ++j) {
            if (j == i || !dist.reachable(i, j)) continue;
            farness += dist(i, j);
            ++reached;
        }
        if (reached == 0) {
            s.values[i] = 0.0;
            s.flags[i] |= kIsolated;
            continue;
        }
        s.values[i] = 1.0 / static_cast<double>(farness);
        if (reached + 1 < adj.size()) s.flags[i] |= kUnreachableRestricted;
    }
    return s;
}

inline CentralityScores closeness_centrality(const LevelAdjacency& adj) {
    return closeness_centrality(adj, all_pairs_distances(adj));
}

using Rational = boost::multiprecision::cpp_rational;

/// Single-source dependencies δ_s(v) = Σ_t σ_st(v)/σ_st via shortest-path
/// counting and reverse-BFS accumulation. `Scalar` holds path counts and
/// ratios, so a rational type gives exact results.
template <typename Scalar>
std::vector<Scalar> source_dependencies(const BooleanMatrix& m, std::size_t source) {
    const std::size_t n = m.size();
    std::vector<Distance> dist(n, kUnreachable);
    std::vector<Scalar> paths(n, Scalar(0));
    std::vector<Scalar> delta(n, Scalar(0));
    std::vector<std::size_t> order;
    order.reserve(n);

    dist[source] = 0;
    paths[source] = Scalar(1);
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::size_t v = order[head];
        for (auto w : m.row(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                order.push_back(w);
            }
            if (dist[w] == dist[v] + 1) paths[w] += paths[v];
        }
    }
    for (std::size_t idx = order.size(); idx-- > 1;) {
        const std::size_t w = order[idx];
        const Scalar share = (Scalar(1) + delta[w]) / paths[w];
        for (auto v : m.row(w))
            if (dist[v] + 1 == dist[w]) delta[v] += paths[v] * share;
    }
    delta[source] = Scalar(0);
    return delta;
}

enum class Arithmetic { exact, floating };

/// Unnormalized betweenness over unordered pairs of mutually reachable
/// simplices, endpoints excluded.
///
/// The exact mode accumulates rationals and rounds once, so scores do not
/// depend on the simplex index order.
inline CentralityScores betweenness_centrality(const LevelAdjacency& adj,
                                               Arithmetic arithmetic = Arithmetic::exact) {
    auto s = detail::make_scores(adj, Measure::betweenness);
    const std::size_t n = adj.size();
    if (arithmetic == Arithmetic::floating) {
        std::vector<std::vector<double>> per_source(n);
        parallel_for(n, [&](std::size_t src) {
            per_source[src] = source_dependencies<double>(adj.combined, src);
        });
        for (std::size_t src = 0; src < n; ++src)
            for (std::size_t v = 0; v < n; ++v) s.values[v] += per_source[src][v];
        for (auto& v : s.values) v /= 2.0;
        return s;
    }
    std::vector<std::vector<Rational>> per_source(n);
    parallel_for(n, [&](std::size_t src) {
        per_source[src] = source_dependencies<Rational>(adj.combined, src);
    });
    std::vector<Rational> total(n, Rational(0));
    for (std::size_t src = 0; src < n; ++src)
        for (std::size_t v = 0; v < n; ++v) total[v] += per_source[src][v];
    for (std::size_t v = 0; v < n; ++v)
        s.values[v] = static_cast<double>(Rational(total[v] / 2));
    return s;
}

struct EigenvectorOptions {
    double tol = 1e-10;
    std::size_t max_iter = 100000;
};

/// Principal-eigenvector centrality of the combined matrix.
///
/// Each component with at least two simplices is solved on its own by power
/// iteration on A + I, scaled to unit Euclidean norm, and then all scores are
/// divided by the global maximum so the top score is exactly 1. Isolated
/// simplices score 0.
inline CentralityScores eigenvector_centrality(const LevelAdjacency& adj,
                                               EigenvectorOptions opts = {}) {
    if (!(opts.tol > 0.0)) throw InputError("eigenvector tolerance must be positive");
    auto s = detail::make_scores(adj, Measure::eigenvector);
    const auto comps = components(adj.combined);

    for (const auto& comp : comps) {
        if (comp.size() < 2) continue;
        const std::size_t n = comp.size();
        std::vector<std::size_t> local(adj.size(), 0);
        for (std::size_t i = 0; i < n; ++i) local[comp[i]] = i;

        auto multiply = [&](const std::vector<double>& x, std::vector<double>& y) {
            for (std::size_t i = 0; i < n; ++i) {
                double acc = 0.0;
                for (auto j : adj.combined.row(comp[i])) acc += x[local[j]];
                y[i] = acc;
            }
        };

        std::vector<double> x(n, 1.0), ax(n);
        ComponentEigenpair pair;
        pair.size = n;
        double residual = 0.0;
        for (std::size_t iter = 0;; ++iter) {
            multiply(x, ax);
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                num += x[i] * ax[i];
                den += x[i] * x[i];
            }
            const double lambda = num / den;
            residual = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                residual = std::max(residual, std::abs(ax[i] - lambda * x[i]));
            pair.eigenvalue = lambda;
            pair.residual = residual;
            pair.iterations = iter;
            if (residual <= opts.tol) break;
            if (iter >= opts.max_iter)
                throw NumericalError("eigenvector centrality did not converge at level " +
                                         std::to_string(adj.k) + " (residual " +
                                         std::to_string(residual) + ")",
                                     residual);
            double top = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = ax[i] + x[i];
                top = std::max(top, x[i]);
            }
            for (auto& v : x) v /= top;
        }
        double norm = 0.0;
        for (double v : x) norm += v * v;
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) s.values[comp[i]] = x[i] / norm;
        s.eigenpairs.push_back(pair);
    }

    const double top = s.values.empty() ? 0.0 : *std::max_element(s.values.begin(), s.values.end());
    if (top > 0.0)
        for (auto& v : s.values) v /= top;
    return s;
}

enum class SubgraphMethod { eigendecomposition, series };

namespace detail {

inline Eigen::MatrixXd dense_block(const BooleanMatrix& m, const std::vector<std::size_t>& comp) {
    const auto n = static_cast<Eigen::Index>(comp.size());
    std::vector<std::size_t> local(m.size(), 0);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (auto j : m.row(comp[i])) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(local[j])) = 1.0;
    return a;
}

// diag(exp(A)) = Σ_j q_ij² exp(λ_j) from the symmetric eigendecomposition.
inline Eigen::VectorXd expm_diagonal_eigen(const Eigen::MatrixXd& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success)
        throw NumericalError("symmetric eigendecomposition failed", 0.0);
    const Eigen::MatrixXd& q = solver.eigenvectors();
    const Eigen::VectorXd weights = solver.eigenvalues().array().exp();
    return q.array().square().matrix() * weights;
}

// Σ_m diag(A^m)/m!, truncated once the tail bound
// a^(m+1)/(m+1)! / (1 - a/(m+2)), a = ||A||_1, drops below tol * min diagonal.
inline Eigen::VectorXd expm_diagonal_series(const Eigen::MatrixXd& a, double tol) {
    const Eigen::Index n = a.rows();
    const double norm1 = n ? a.cwiseAbs().colwise().sum().maxCoeff() : 0.0;
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd diag = Eigen::VectorXd::Ones(n);
    double bound = 1.0; // a^m / m!
    for (int m = 1;; ++m) {
        term = (a * term) / static_cast<double>(m);
        diag += term.diagonal();
        bound *= norm1 / static_cast<double>(m);
        const double ratio = norm1 / static_cast<double>(m + 2);
        if (ratio < 1.0) {
            const double tail = bound * norm1 / static_cast<double>(m + 1) / (1.0 - ratio);
            if (tail < tol * diag.minCoeff()) break;
        }
        if (m > 100000) throw NumericalError("matrix exponential series did not converge", bound);
    }
    return diag;
}

} // namespace detail

/// Diagonal of exp(A^k): closed walks weighted by 1/m!. The empty walk
/// contributes 1, so an isolated simplex scores exactly 1.
inline CentralityScores subgraph_centrality(const LevelAdjacency& adj, double tol = 1e-12,
                                            SubgraphMethod method = SubgraphMethod::eigendecomposition) {
    if (!(tol > 0.0)) throw InputError("subgraph tolerance must be positive");
    auto s = detail::make_scores(adj, Measure::subgraph);
    for (const auto& comp : components(adj.combined)) {
        if (comp.size() == 1) {
            s.values[comp[0]] = 1.0;
            continue;
        }
        const auto a = detail::dense_block(adj.combined, comp);
        const Eigen::VectorXd d = method == SubgraphMethod::eigendecomposition
                                      ? detail::expm_diagonal_eigen(a)
                                      : detail::expm_diagonal_series(a, tol);
        for (std::size_t i = 0; i < comp.size(); ++i)
            s.values[comp[i]] = d(static_cast<Eigen::Index>(i));
    }
    return s;
}

struct CentralityOptions {
    EigenvectorOptions eigenvector;
    double subgraph_tol = 1e-12;
    Arithmetic betweenness = Arithmetic::exact;
};

inline CentralityScores compute_centrality(const LevelAdjacency& adj, const DistanceTable& dist,
                                           Measure m, const CentralityOptions& opts = {}) {
    switch (m) {
    case Measure::degree: return degree_centrality(adj);
    case Measure::closeness: return closeness_centrality(adj, dist);
    case Measure::betweenness: return betweenness_centrality(adj, opts.betweenness);
    case Measure::eigenvector: return eigenvector_centrality(adj, opts.eigenvector);
    case Measure::subgraph: return subgraph_centrality(adj, opts.subgraph_tol);
    }
    throw InputError("unknown measure");
}

} // namespace sx
