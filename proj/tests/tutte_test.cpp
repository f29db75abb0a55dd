#include <random>

#include <gtest/gtest.h>

#include "graphrel/errors.hpp"
#include "graphrel/fixtures.hpp"
#include "graphrel/tutte.hpp"
#include "oracles.hpp"

namespace graphrel {
namespace {

TEST(TutteExpansion, SmallGraphs) {
  EXPECT_EQ(tutte_expansion(fixtures::cycle(3)), parse_poly("x^2 + x + y"));
  EXPECT_EQ(tutte_expansion(fixtures::complete(2)), parse_poly("x"));
  EXPECT_EQ(tutte_expansion(fixtures::path(3)), parse_poly("x^2"));
}

TEST(TutteExpansion, RefusesOverBudget) {
  EXPECT_THROW(tutte_expansion(fixtures::complete(8)), BudgetError);
}

TEST(TutteDc, SmallGraphs) {
  EXPECT_EQ(tutte_dc(fixtures::cycle(3)), parse_poly("x^2 + x + y"));
  EXPECT_EQ(tutte_dc(MultiGraph(2, {{0, 1}, {0, 1}})), parse_poly("x + y"));
  EXPECT_EQ(tutte_dc(fixtures::cycle(4)), parse_poly("x^3 + x^2 + x + y"));
  EXPECT_EQ(tutte_dc(fixtures::complete(4)),
            parse_poly("x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3"));
}

TEST(TutteDc, MultigraphsMatchRankExpansion) {
  const std::vector<MultiGraph> cases = {
      MultiGraph(2, {{0, 1}, {0, 1}}),
      MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}}),
      MultiGraph(1, {{0, 0}}),
      MultiGraph(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}, {2, 2}}),
      MultiGraph(4, {{0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 1}}),
      MultiGraph(4, {{0, 1}, {0, 1}, {2, 3}}),
  };
  for (const auto& g : cases) EXPECT_EQ(tutte_dc(g), oracle::tutte_of_multigraph(g));
}

TEST(TutteDc, RandomMultigraphsMatchRankExpansion) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int m = static_cast<int>(rng() % 12);
    std::vector<Edge> edges;
    for (int e = 0; e < m; ++e) edges.push_back(make_edge(static_cast<int>(rng() % n), static_cast<int>(rng() % n)));
    const MultiGraph g(n, edges);
    EXPECT_EQ(tutte_dc(g), oracle::tutte_of_multigraph(g));
  }
}

TEST(TutteDc, AgreesWithExpansionOnAllConnectedGraphsUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::connected_classes_bruteforce(n)) EXPECT_EQ(tutte_dc(g), tutte_expansion(g));
  }
}

TEST(TutteDc, AgreesWithExpansionOnRandomGraphs) {
  std::mt19937_64 rng(99);
  TutteMemo memo;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int max_m = std::min(20, n * (n - 1) / 2);
    const int m = static_cast<int>(rng() % (max_m + 1));
    const auto g = oracle::random_graph(rng, n, m);
    EXPECT_EQ(tutte_dc(g, memo), tutte_expansion(g));
  }
}

TEST(TutteDc, InvariantUnderRelabeling) {
  std::mt19937_64 rng(7);
  const auto t = tutte_dc(fixtures::figure1_g());
  for (int k = 0; k < 5; ++k) {
    EXPECT_EQ(tutte_dc(fixtures::figure1_g().relabeled(oracle::random_permutation(rng, 8))), t);
  }
}

TEST(TutteDc, Figure1MatchesExpansion) {
  const auto g = fixtures::figure1_g();
  const auto t = tutte_dc(g);
  EXPECT_EQ(t, tutte_expansion(g));
  EXPECT_LE(t.term_count(), 283U);
  // T(1,1) counts spanning trees, T(2,2) = 2^m.
  EXPECT_EQ(t.evaluate(1, 1), mpq_class(tree_number_mtt(g)));
  EXPECT_EQ(t.evaluate(2, 2), mpq_class(mpz_class(1) << 18));
}

TEST(TutteDc, MemoIsReusedAndBounded) {
  TutteMemo memo;
  const auto a = tutte_dc(fixtures::complete(6), memo);
  const auto size = memo.size();
  EXPECT_GT(size, 0U);
  EXPECT_EQ(tutte_dc(fixtures::complete(6), memo), a);
  EXPECT_GT(memo.hits(), 0U);
  TutteMemo tiny(2);
  EXPECT_EQ(tutte_dc(fixtures::complete(6), tiny), a);
  EXPECT_LE(tiny.size(), 2U);
}

TEST(TutteDc, DisconnectedGraphMultiplies) {
  const SimpleGraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto t3 = tutte_dc(fixtures::cycle(3));
  EXPECT_EQ(tutte_dc(two_triangles), t3 * t3);
  EXPECT_EQ(tutte_dc(SimpleGraph(4)), BivarPoly::constant(1));
}

TEST(Whitney, Examples) {
  EXPECT_EQ(whitney(fixtures::cycle(3)), parse_poly("x^2 + 3x + y + 3"));
  EXPECT_EQ(whitney(fixtures::complete(2)), parse_poly("x + 1"));
  for (int n = 2; n <= 7; ++n) {
    BivarPoly expected = BivarPoly::constant(1);
    for (int i = 1; i < n; ++i) expected = expected * (BivarPoly::x() + BivarPoly::constant(1));
    EXPECT_EQ(whitney(fixtures::path(n)), expected);
  }
}

TEST(Whitney, MatchesDirectExpansion) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto g = oracle::random_connected_graph(rng, n, n - 1 + static_cast<int>(rng() % n));
    EXPECT_EQ(whitney(g), whitney_expansion(g));
  }
}

TEST(ForestGen, Examples) {
  auto as_long = [](const std::vector<mpz_class>& v) {
    std::vector<long> out;
    for (const auto& c : v) out.push_back(c.get_si());
    return out;
  };
  EXPECT_EQ(as_long(forest_gen(fixtures::cycle(3))), (std::vector<long>{3, 3, 1}));
  EXPECT_EQ(forest_gen(fixtures::cycle(4))[0], 4);
  EXPECT_EQ(as_long(forest_gen(fixtures::complete(2))), (std::vector<long>{1, 1}));
  EXPECT_THROW(forest_gen(SimpleGraph(3, {{0, 1}})), std::invalid_argument);
}

TEST(TreeNumber, Examples) {
  EXPECT_EQ(tree_number(fixtures::cycle(5)), 5);
  EXPECT_EQ(tree_number(fixtures::complete(4)), 16);
  EXPECT_EQ(tree_number_mtt(fixtures::complete(4)), 16);
  EXPECT_EQ(tree_number_mtt(fixtures::complete(9)), 4782969);  // 9^7
  EXPECT_THROW(tree_number(SimpleGraph(2)), std::invalid_argument);
  EXPECT_THROW(tree_number_mtt(SimpleGraph(2)), std::invalid_argument);
}

TEST(TreeNumber, Figure1Pinned) {
  const auto g = fixtures::figure1_g();
  EXPECT_EQ(tree_number(g), tree_number_mtt(g));
  EXPECT_EQ(tree_number(g), 9216);  // floating-point Laplacian determinant, computed offline
}

TEST(TreeNumber, AgreesWithMatrixTreeOnRandomGraphs) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const int extra = static_cast<int>(rng() % (n * (n - 1) / 2 - (n - 1) + 1));
    const auto g = oracle::random_connected_graph(rng, n, n - 1 + std::min(extra, 14));
    EXPECT_EQ(tree_number(g), tree_number_mtt(g));
  }
}

}  // namespace
}  // namespace graphrel
