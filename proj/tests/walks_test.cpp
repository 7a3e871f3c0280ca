#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sx/walks.hpp"

using fixtures::by_labels;
using fixtures::index_of;

namespace {

oracle::Levels levels_of(const sx::SimplicialComplex& c) {
    oracle::Levels out(static_cast<std::size_t>(c.dim() + 1));
    for (int k = 0; k <= c.dim(); ++k)
        for (const auto& s : c.level(k)) out[static_cast<std::size_t>(k)].emplace_back(s.vertices().begin(), s.vertices().end());
    return out;
}

class TriangleChainWalks : public ::testing::Test {
protected:
    sx::SimplicialComplex c = sx::clique_complex(fixtures::triangle_chain());
    std::size_t idx(const std::string& s) const { return index_of(c, s); }
};

} // namespace

TEST_F(TriangleChainWalks, LevelOneDistances) {
    const auto a = sx::level_adjacency(c, 1);
    const auto d = sx::shortest_distances(a, idx("ab"));
    EXPECT_EQ(d[idx("bc")], 4u);
    EXPECT_EQ(d[idx("ab")], 0u);
    EXPECT_EQ(d[idx("ad")], 1u);
    const auto from_ac = sx::shortest_distances(a, idx("ac"));
    for (std::size_t j = 0; j < a.size(); ++j)
        EXPECT_TRUE(j == idx("ac") || from_ac[j] == sx::kUnreachable);
    EXPECT_THROW(sx::shortest_distances(a, 99), sx::InputError);
}

TEST_F(TriangleChainWalks, LevelTwoTable) {
    const auto t = sx::all_pairs_distances(sx::level_adjacency(c, 2));
    EXPECT_EQ(t(idx("abc"), idx("acd")), 1u);
    EXPECT_EQ(t(idx("acd"), idx("abc")), 1u);
    EXPECT_FALSE(t.reachable(idx("abc"), idx("def")));
    EXPECT_EQ(t(idx("def"), idx("def")), 0u);
}

TEST(AllPairs, Triangle) {
    const auto c = sx::clique_complex(fixtures::complete_graph(3));
    const auto t0 = sx::all_pairs_distances(sx::level_adjacency(c, 0));
    const auto t1 = sx::all_pairs_distances(sx::level_adjacency(c, 1));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_EQ(t0(i, j), i == j ? 0u : 1u);
            EXPECT_EQ(t1(i, j), i == j ? 0u : sx::kUnreachable);
        }
}

TEST_F(TriangleChainWalks, WitnessThroughSharedFacet) {
    const auto a = sx::level_adjacency(c, 2);
    const auto w = sx::witness_walk(c, a, by_labels(c, "abc"), by_labels(c, "acd"));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->simplices, (std::vector<sx::Simplex>{by_labels(c, "abc"), by_labels(c, "acd")}));
    EXPECT_EQ(w->connectors, (std::vector<sx::Simplex>{by_labels(c, "ac")}));
    EXPECT_EQ(sx::format_walk(*w, c.labels()), "{a,b,c} via {a,c} {a,c,d}");
    EXPECT_FALSE(sx::witness_walk(c, a, by_labels(c, "abc"), by_labels(c, "def")));
}

TEST_F(TriangleChainWalks, WitnessToSelfAndLevelChecks) {
    const auto a1 = sx::level_adjacency(c, 1);
    const auto w = sx::witness_walk(c, a1, by_labels(c, "ab"), by_labels(c, "ab"));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->length(), 0u);
    EXPECT_EQ(w->simplices.size(), 1u);
    EXPECT_THROW(sx::witness_walk(c, a1, by_labels(c, "ab"), by_labels(c, "abc")), sx::InputError);
    EXPECT_THROW(sx::witness_walk(c, a1, by_labels(c, "abc"), by_labels(c, "acd")), sx::InputError);

    const auto long_walk = sx::witness_walk(c, a1, by_labels(c, "ab"), by_labels(c, "bc"));
    ASSERT_TRUE(long_walk);
    EXPECT_EQ(long_walk->length(), 4u);
    // ab-ad-de-cd-bc and ab-ad-df-cd-bc tie; de precedes df lexicographically.
    EXPECT_EQ(sx::format_walk(*long_walk, c.labels()),
              "{a,b} via {a} {a,d} via {d} {d,e} via {d} {c,d} via {c} {b,c}");
}

TEST(Witness, ChainAtLevelOne) {
    const auto g = fixtures::labeled_graph({"15", "10", "6", "8", "16"},
                                           {{"15", "10"}, {"10", "6"}, {"6", "8"}, {"8", "16"}});
    const auto c = sx::clique_complex(g);
    const auto a = sx::level_adjacency(c, 1);
    const auto w = sx::witness_walk(c, a, sx::Simplex{0, 1}, sx::Simplex{3, 4});
    ASSERT_TRUE(w);
    EXPECT_EQ(sx::format_walk(*w, c.labels()), "{15,10} via {10} {10,6} via {6} {6,8} via {8} {8,16}");
}

TEST(Witness, LevelZeroIsAGraphWalk) {
    const auto c = sx::clique_complex(fixtures::path_graph(4));
    const auto w = sx::witness_walk(c, sx::level_adjacency(c, 0), sx::Simplex{0}, sx::Simplex{3});
    ASSERT_TRUE(w);
    EXPECT_EQ(w->length(), 3u);
    EXPECT_TRUE(w->connectors.empty());
    EXPECT_EQ(sx::format_walk(*w), "{0} {1} {2} {3}");
}

TEST(WalkProperty, MetricAxiomsAndWitnessesOnRandomComplexes) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> size(2, 9);
    std::uniform_real_distribution<double> density(0.15, 0.9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = sx::clique_complex(oracle::random_graph(rng, size(rng), density(rng)));
        for (int k = 0; k <= c.dim(); ++k) {
            const auto a = sx::level_adjacency(c, k);
            const auto t = sx::all_pairs_distances(a);
            const std::size_t n = a.size();
            for (std::size_t i = 0; i < n; ++i) {
                EXPECT_EQ(t(i, i), 0u);
                for (std::size_t j = 0; j < n; ++j) {
                    EXPECT_EQ(t(i, j), t(j, i));
                    EXPECT_TRUE(i == j || !t.reachable(i, j) || t(i, j) > 0);
                    for (std::size_t m = 0; m < n; ++m)
                        EXPECT_TRUE(!t.reachable(i, j) || !t.reachable(j, m) || t(i, m) <= t(i, j) + t(j, m));
                }
            }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const auto w = sx::witness_walk(c, a, a.simplices[i], a.simplices[j]);
                    ASSERT_EQ(w.has_value(), t.reachable(i, j));
                    if (!w) continue;
                    ASSERT_EQ(w->length(), t(i, j));
                    for (std::size_t s = 0; s + 1 < w->simplices.size(); ++s) {
                        const auto& x = w->simplices[s];
                        const auto& y = w->simplices[s + 1];
                        if (k > 0) {
                            EXPECT_TRUE(w->connectors[s].is_face_of(x) && w->connectors[s].is_face_of(y));
                            EXPECT_EQ(w->connectors[s].dimension(), k - 1);
                            EXPECT_FALSE(c.contains(sx::set_union(x, y)));
                        } else {
                            EXPECT_TRUE(c.contains(sx::set_union(x, y)));
                        }
                    }
                }
        }
    }
}

TEST(WalkProperty, BfsMatchesAlternatingWalkEnumerationOnSmallGraphs) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& g : oracle::connected_graphs_up_to_iso(n)) {
            const auto c = sx::clique_complex(g);
            const auto levels = levels_of(c);
            for (int k = 0; k <= c.dim(); ++k) {
                const auto t = sx::all_pairs_distances(sx::level_adjacency(c, k));
                const auto expected = oracle::enumerated_distances(levels, static_cast<std::size_t>(k));
                for (std::size_t i = 0; i < t.size(); ++i)
                    for (std::size_t j = 0; j < t.size(); ++j)
                        ASSERT_EQ(t.reachable(i, j) ? static_cast<int>(t(i, j)) : oracle::kInf, expected[i][j]);
            }
        }
}
