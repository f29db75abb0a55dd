#include <random>

#include <gtest/gtest.h>

#include "graphrel/canonical.hpp"
#include "graphrel/fixtures.hpp"
#include "graphrel/graph.hpp"
#include "graphrel/graph_io.hpp"
#include "oracles.hpp"

namespace graphrel {
namespace {

TEST(Components, CountsIsolatedVertices) {
  const auto c = components(SimpleGraph(3));
  EXPECT_EQ(c.count, 3);
  EXPECT_NE(c.label[0], c.label[1]);
}

TEST(Components, CycleIsConnected) { EXPECT_EQ(components(fixtures::cycle(4)).count, 1); }

TEST(Components, TwoEdgesPlusIsolate) {
  const SimpleGraph g(5, {{0, 1}, {2, 3}});
  const auto c = components(g);
  EXPECT_EQ(c.count, 3);
  EXPECT_EQ(c.label[0], c.label[1]);
  EXPECT_EQ(c.label[2], c.label[3]);
  EXPECT_NE(c.label[0], c.label[2]);
  EXPECT_NE(c.label[4], c.label[0]);
}

TEST(Components, EmptyGraphHasNoComponents) { EXPECT_EQ(components(SimpleGraph(0)).count, 0); }

TEST(Components, MultiGraphLoopsDoNotConnect) {
  const MultiGraph g(3, {{0, 0}, {1, 2}, {1, 2}});
  EXPECT_EQ(components(g).count, 2);
  EXPECT_EQ(g.loop_count(), 1);
}

TEST(RankCorank, Examples) {
  const auto c4 = rank_corank(fixtures::cycle(4));
  EXPECT_EQ(c4.rank, 3);
  EXPECT_EQ(c4.corank, 1);
  const auto tree = rank_corank(fixtures::path(5));
  EXPECT_EQ(tree.rank, 4);
  EXPECT_EQ(tree.corank, 0);
  const auto empty = rank_corank(SimpleGraph(3));
  EXPECT_EQ(empty.rank, 0);
  EXPECT_EQ(empty.corank, 0);
}

TEST(RankCorank, AgreesWithComponentsOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const int m = static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
    const auto g = oracle::random_graph(rng, n, m);
    const int kappa = components(g).count;
    const auto rc = rank_corank(g);
    EXPECT_EQ(rc.rank + kappa, n);
    EXPECT_EQ(rc.corank, m - n + kappa);
    EXPECT_GE(rc.corank, 0);
  }
}

TEST(SimpleGraph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(SimpleGraph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(SimpleGraph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(SimpleGraph(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(SimpleGraph(63), std::invalid_argument);
}

TEST(Canonical, RelabeledPathsAgree) {
  const SimpleGraph a(3, {{0, 1}, {1, 2}});
  const SimpleGraph b(3, {{2, 0}, {0, 1}});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
}

TEST(Canonical, TriangleDiffersFromPath) {
  EXPECT_NE(canonical_form(fixtures::cycle(3)), canonical_form(fixtures::path(3)));
}

TEST(Canonical, Figure1GraphsDiffer) {
  const auto g = fixtures::figure1_g();
  const auto h = fixtures::figure1_h();
  ASSERT_FALSE(oracle::isomorphic(g, h));
  EXPECT_NE(canonical_form(g), canonical_form(h));
}

TEST(Canonical, RelabelingInvariance) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const int m = static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
    const auto g = oracle::random_graph(rng, n, m);
    const auto form = canonical_form(g);
    for (int k = 0; k < 10; ++k) {
      EXPECT_EQ(canonical_form(g.relabeled(oracle::random_permutation(rng, n))), form);
    }
  }
}

TEST(Canonical, SeparatesExactlyTheIsomorphismClassesOnFiveVertices) {
  const auto all = oracle::all_labeled_graphs(5);
  std::map<CanonicalForm, SimpleGraph> reps;
  for (const auto& g : all) reps.emplace(canonical_form(g), g);
  EXPECT_EQ(reps.size(), 34U);  // graphs on 5 vertices
  for (auto a = reps.begin(); a != reps.end(); ++a) {
    for (auto b = std::next(a); b != reps.end(); ++b) EXPECT_FALSE(oracle::isomorphic(a->second, b->second));
  }
}

TEST(Canonical, SymmetricGraphsFinish) {
  EXPECT_EQ(canonical_form(SimpleGraph(12)), canonical_form(SimpleGraph(12)));
  const auto k = fixtures::complete(12);
  std::mt19937_64 rng(5);
  EXPECT_EQ(canonical_form(k), canonical_form(k.relabeled(oracle::random_permutation(rng, 12))));
  const auto petersen = SimpleGraph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                         {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  EXPECT_EQ(canonical_form(petersen), canonical_form(petersen.relabeled(oracle::random_permutation(rng, 10))));
}

TEST(Canonical, CanonicalGraphIsIsomorphicCopy) {
  const auto g = fixtures::figure1_g();
  const auto c = canonical_graph(g);
  EXPECT_TRUE(oracle::isomorphic(g, c));
  EXPECT_EQ(canonical_graph(c), c);
}

TEST(Canonical, MultigraphFormsSeeMultiplicityAndLoops) {
  const MultiGraph a(2, {{0, 1}, {0, 1}});
  const MultiGraph b(2, {{0, 1}});
  const MultiGraph c(2, {{0, 1}, {0, 0}});
  const MultiGraph d(2, {{0, 1}, {1, 1}});
  EXPECT_NE(canonical_form(a), canonical_form(b));
  EXPECT_NE(canonical_form(b), canonical_form(c));
  EXPECT_EQ(canonical_form(c), canonical_form(d));
}

TEST(Graph6, K2) {
  EXPECT_EQ(to_graph6(fixtures::complete(2)), "A_");
  EXPECT_EQ(parse_graph6("A_"), fixtures::complete(2));
}

TEST(Graph6, KnownEncodings) {
  // Reference strings from the standard graph6 description.
  EXPECT_EQ(to_graph6(fixtures::complete(4)), "C~");
  EXPECT_EQ(to_graph6(SimpleGraph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})), "DQc");
  EXPECT_EQ(to_graph6(SimpleGraph(0)), "?");
  EXPECT_EQ(to_graph6(SimpleGraph(1)), "@");
}

TEST(Graph6, RoundTripsRandomLabeledGraphs) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng() % 9);
    const int m = n < 2 ? 0 : static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
    const auto g = oracle::random_graph(rng, n, m);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
  const auto big = fixtures::complete(62);
  EXPECT_EQ(parse_graph6(to_graph6(big)), big);
}

TEST(Graph6, AcceptsHeaderAndNewline) { EXPECT_EQ(parse_graph6(">>graph6<<A_\n"), fixtures::complete(2)); }

TEST(Graph6, Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("C"), ParseError);     // truncated
  EXPECT_THROW(parse_graph6("A__"), ParseError);   // trailing byte
  EXPECT_THROW(parse_graph6("A`"), ParseError);    // padding bit set
  EXPECT_THROW(parse_graph6("~?"), ParseError);    // n > 62
  try {
    parse_graph6("D Qc");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1U);
  }
}

TEST(EdgeList, Triangle) {
  EXPECT_EQ(parse_edge_list("3 3\n0 1\n1 2\n0 2\n"), fixtures::cycle(3));
}

TEST(EdgeList, CommentsAndBlankLines) {
  EXPECT_EQ(parse_edge_list("# K2\n2 1\n\n0 1  # edge\n"), fixtures::complete(2));
}

TEST(EdgeList, RoundTrip) {
  const auto g = fixtures::figure1_h();
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
}

TEST(EdgeList, Errors) {
  auto message = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("2 1\n0 0\n").find("loop"), std::string::npos);
  EXPECT_NE(message("2 2\n0 1\n0 1\n").find("duplicate"), std::string::npos);
  EXPECT_NE(message("3 2\n0 1\n1 0\n").find("duplicate"), std::string::npos);
  EXPECT_NE(message("2 -1\n").find("negative"), std::string::npos);
  EXPECT_NE(message("2 1\n0 2\n").find("out of range"), std::string::npos);
  EXPECT_NE(message("3 2\n0 1\n").find("declared"), std::string::npos);
  EXPECT_NE(message("3 1\n0 1\n1 2\n").find("more than"), std::string::npos);
  EXPECT_NE(message("").find("header"), std::string::npos);
  EXPECT_NE(message("2 x\n").find("two integers"), std::string::npos);
}

TEST(Fixtures, Figure1) {
  const auto g = fixtures::figure1_g();
  const auto h = fixtures::figure1_h();
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.size(), 18);
  EXPECT_EQ(h.order(), 8);
  EXPECT_EQ(h.size(), 18);
  for (int u = 0; u < 4; ++u) {
    for (int v = 4; v < 8; ++v) {
      EXPECT_TRUE(g.has_edge(u, v));
      EXPECT_TRUE(h.has_edge(u, v));
    }
  }
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(2, 3));
  EXPECT_TRUE(h.has_edge(2, 3));
  EXPECT_TRUE(h.has_edge(6, 7));
}

TEST(Fixtures, Families) {
  EXPECT_EQ(fixtures::complete_minus_matching(6, 3).size(), 12);
  EXPECT_EQ(fixtures::cycle(4), SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  EXPECT_EQ(fixtures::complete_bipartite(2, 3).size(), 6);
  EXPECT_EQ(fixtures::by_name("complete_minus_matching:6:3"), fixtures::complete_minus_matching(6, 3));
  EXPECT_EQ(fixtures::by_name("cycle:5"), fixtures::cycle(5));
  EXPECT_EQ(fixtures::by_name("figure1_G"), fixtures::figure1_g());
}

TEST(Fixtures, InvalidParameters) {
  EXPECT_THROW(fixtures::cycle(2), std::invalid_argument);
  EXPECT_THROW(fixtures::complete_minus_matching(5, 3), std::invalid_argument);
  EXPECT_THROW(fixtures::by_name("wheel:5"), std::invalid_argument);
  EXPECT_THROW(fixtures::by_name("cycle"), std::invalid_argument);
  EXPECT_THROW(fixtures::by_name("cycle:x"), std::invalid_argument);
}

TEST(Census, SumsToPowerOfTwoAndRejectsLargeGraphs) {
  const auto census = subgraph_census(fixtures::complete(5), 24);
  std::uint64_t total = 0;
  for (const auto& row : census) {
    for (auto c : row) total += c;
  }
  EXPECT_EQ(total, 1U << 10);
  EXPECT_THROW(subgraph_census(fixtures::complete(8), 24), BudgetError);
}

}  // namespace
}  // namespace graphrel
