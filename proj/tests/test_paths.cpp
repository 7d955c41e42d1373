#include "interlace/errors.hpp"
#include "interlace/paths.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace interlace;

namespace {

VertexId at(const Network& g, int r, int c) { return *g.find_vertex(Coord{r, c}); }

}  // namespace

TEST(IndexSets, ComplementAndSubsets) {
    EXPECT_EQ(complement({2, 4}, 5), (IndexSet{1, 3, 5}));
    EXPECT_EQ(subsets(4, 2).size(), 6u);
    EXPECT_EQ(subsets(4, 2).front(), (IndexSet{1, 2}));
    EXPECT_EQ(subsets(3, 0), (std::vector<IndexSet>{IndexSet{}}));
    EXPECT_EQ(format_index_set({2, 4, 6}), "{2,4,6}");
    EXPECT_EQ(all_patterns(3).size(), 100u);
}

TEST(NcTuples, CornerToCorner) {
    Network g = build_grid_network(3, 3, 2);
    auto tuples = enumerate_nc_tuples(g, {at(g, 1, 1)}, {at(g, 3, 3)});
    EXPECT_EQ(tuples.size(), 6u);
    for (const auto& t : tuples) EXPECT_EQ(weight(g, t), Scalar(1));
    EXPECT_TRUE(std::is_sorted(tuples.begin(), tuples.end()));
}

TEST(NcTuples, EmptyTuple) {
    Network g = build_grid_network(3, 3, 2);
    auto tuples = enumerate_nc_tuples(g, {}, {});
    ASSERT_EQ(tuples.size(), 1u);
    EXPECT_TRUE(tuples[0].empty());
    EXPECT_EQ(weight(g, tuples[0]), Scalar(1));
}

TEST(NcTuples, LengthMismatch) {
    Network g = build_grid_network(3, 3, 2);
    EXPECT_THROW(enumerate_nc_tuples(g, {at(g, 1, 1)}, {}), ArgumentError);
}

TEST(NcTuples, DoubledSourceGivesNothing) {
    Network g = build_schur_network({2, 2, 2}, 1, 4);
    // Sources 1 and 2 are the same vertex.
    ASSERT_EQ(g.source(1), g.source(2));
    EXPECT_TRUE(enumerate_nc(g, {1, 2}, {1, 3}).empty());
    EXPECT_TRUE(enumerate_pnc(g, {1, 2}, {1, 3}).empty());
}

TEST(NcTuples, SchurNetworkEvenPatternNonEmpty) {
    Network g = build_schur_network({3, 2, 2, 1}, 1, 5);
    EXPECT_FALSE(enumerate_nc(g, {2, 4, 6}, {2, 4, 6}).empty());
    EXPECT_FALSE(enumerate_pnc(g, {2, 4, 6}, {2, 4, 6}).empty());
}

TEST(NcTuples, EightByTenPatternNonEmpty) {
    Network g = build_grid_network(8, 10, 4);
    PatternWeights w(g);
    EXPECT_GT(w.nc_sum({2, 4, 6}, {2, 4, 6}).constant_value(), Rational(0));
    EXPECT_GT(w.nc_sum({1, 3, 5, 7}, {1, 3, 5, 7}).constant_value(), Rational(0));
}

TEST(NcTuples, MatchesDfsOracle) {
    Network g = build_grid_network(4, 4, 2);
    for (const auto& [I, J] : all_patterns(2)) {
        auto from = select_terminals(g.sources(), I), to = select_terminals(g.sinks(), J);
        auto mine = enumerate_nc_tuples(g, from, to);
        auto ref = oracle::nc_tuples(g, from, to);
        std::sort(ref.begin(), ref.end());
        EXPECT_EQ(mine, ref);
        auto pnc = enumerate_pnc(g, I, J);
        auto blue_from = select_terminals(g.sources(), complement(I, 3));
        auto blue_to = select_terminals(g.sinks(), complement(J, 3));
        EXPECT_EQ(pnc.size(), ref.size() * oracle::nc_tuples(g, blue_from, blue_to).size());
    }
    // Regression constant for the ({2},{2}) pattern.
    EXPECT_EQ(enumerate_pnc(g, {2}, {2}).size(), 120u);
}

TEST(NcTuples, EveryTupleIsValid) {
    Network g = build_grid_network(5, 5, 3);
    for (const auto& t : enumerate_nc(g, {1, 3, 5}, {1, 3, 5})) {
        EXPECT_TRUE(is_noncrossing(t));
        for (const auto& p : t) EXPECT_TRUE(is_path(g, p));
    }
}

TEST(Weight, Basics) {
    Network g = build_grid_network(3, 3, 2, random_edge_weights(2));
    EXPECT_EQ(weight(g, Path{at(g, 1, 1)}), Scalar(1));
    Path p{at(g, 1, 1), at(g, 1, 2), at(g, 2, 2)};
    EXPECT_EQ(weight(g, p), oracle::path_weight(g, p));
}

TEST(Weight, SchurHorizontalStep) {
    Network g = build_schur_network({2, 1}, 0, 3);
    VertexId a = *g.find_vertex(Coord{3, 2}), b = *g.find_vertex(Coord{2, 2});
    EXPECT_EQ(weight(g, Path{a, b}), Polynomial::var(2));
}

TEST(HatWeight, Examples) {
    Network g = build_grid_network(3, 3, 2);
    std::vector<Scalar> vw(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Coord c = *g.coord(v);
        vw[v] = Polynomial::var(static_cast<VarIndex>(10 * c.r + c.c));
    }
    EXPECT_EQ(hat_weight(vw, Path{at(g, 1, 1), at(g, 1, 2)}), parse_polynomial("x11*x12"));
    std::vector<Scalar> ones(g.vertex_count(), Scalar(1));
    EXPECT_EQ(hat_weight(ones, Path{at(g, 1, 1), at(g, 2, 1), at(g, 2, 2)}), Scalar(1));
    EXPECT_THROW(hat_weight(std::vector<Scalar>(2, Scalar(1)), Path{at(g, 3, 3)}), ArgumentError);
}

TEST(PatternWeight, ImpossibleIsZero) {
    Network g = build_interspace_witness(3);
    EXPECT_TRUE(PatternWeights(g).nc_sum({1, 2, 3, 4}, {1, 2, 3, 4}).is_zero());
}

TEST(PatternWeight, RandomWeightsMatchOracle) {
    Network g = build_grid_network(4, 5, 2, random_edge_weights(17));
    auto red = oracle::nc_weight(g, {g.source(2)}, {g.sink(2)});
    auto blue = oracle::nc_weight(g, {g.source(1), g.source(3)}, {g.sink(1), g.sink(3)});
    EXPECT_EQ(pattern_weight(g, {2}, {2}), red * blue);
}

TEST(PatternWeight, Multiplicative) {
    Network g = build_grid_network(5, 5, 3, random_edge_weights(4));
    PatternWeights w(g);
    for (const auto& [I, J] : all_patterns(3)) {
        Scalar direct;
        for (const auto& pair : enumerate_pnc(g, I, J)) direct += weight(g, pair.red) * weight(g, pair.blue);
        ASSERT_EQ(w.pattern_weight(I, J), direct);
        ASSERT_EQ(w.pattern_weight(I, J), w.nc_sum(I, J) * w.nc_sum(complement(I, 5), complement(J, 5)));
    }
}

TEST(PatternWeight, ThreeTermOnNineByNineGrid) {
    Network g = build_grid_network(9, 9, 4);
    EXPECT_EQ(pattern_weight(g, {2, 4, 6}, {2, 4, 6}),
              pattern_weight(g, {2, 4, 6}, {3, 5, 7}) + pattern_weight(g, {2, 4, 6}, {1, 3, 5}));
}

TEST(PatternWeight, HatModeMatchesVertexProducts) {
    Network g = build_grid_network(4, 4, 2);
    std::vector<Scalar> vw(g.vertex_count());
    std::mt19937_64 rng(8);
    for (auto& s : vw) s = Scalar(Rational(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 5) + 1));
    Scalar direct;
    for (const auto& pair : enumerate_pnc(g, {2}, {2})) direct += hat_weight(vw, pair.red) * hat_weight(vw, pair.blue);
    EXPECT_EQ(pattern_weight(g, {2}, {2}, WeightMode::Hat, &vw), direct);
}

// Unit-weight counts against the path-count determinant, every grid with 3 <= m, n <= 6.
TEST(PathsProperty, CompletenessAgainstDeterminantCounts) {
    for (int m = 3; m <= 6; ++m) {
        for (int n = 3; n <= 6; ++n) {
            for (int k = 2; k < std::min(m, n); ++k) {
                Network g = build_grid_network(m, n, k);
                const int total = 2 * k - 1;
                for (int size = 1; size <= std::min(total, 3); ++size) {
                    for (const auto& I : subsets(total, size)) {
                        for (const auto& J : subsets(total, size)) {
                            auto from = select_terminals(g.sources(), I), to = select_terminals(g.sinks(), J);
                            std::vector<std::vector<long long>> a(size, std::vector<long long>(size));
                            for (int i = 0; i < size; ++i)
                                for (int j = 0; j < size; ++j) a[i][j] = oracle::path_count(g, from[i], to[j]);
                            ASSERT_EQ(static_cast<long long>(count_nc_tuples(g, from, to)), oracle::permutation_det(a))
                                << m << "x" << n << " k=" << k << " " << format_index_set(I) << format_index_set(J);
                        }
                    }
                }
            }
        }
    }
}

TEST(PathsProperty, SmallGridsMatchDfsExactly) {
    for (int m = 3; m <= 4; ++m) {
        for (int n = 3; n <= 5; ++n) {
            Network g = build_grid_network(m, n, 2, random_edge_weights(m * 10 + n));
            for (const auto& [I, J] : all_patterns(2)) {
                auto from = select_terminals(g.sources(), I), to = select_terminals(g.sinks(), J);
                ASSERT_EQ(nc_weight_sum(g, from, to), oracle::nc_weight(g, from, to));
            }
        }
    }
}
