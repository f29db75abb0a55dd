#include <random>

#include <gtest/gtest.h>

#include "graphrel/counts.hpp"
#include "graphrel/fixtures.hpp"
#include "graphrel/mc.hpp"
#include "graphrel/tutte.hpp"
#include "oracles.hpp"

namespace graphrel {
namespace {

TEST(Estimate, ExtremeProbabilities) {
  const auto g = fixtures::figure1_g();
  const auto one = estimate(g, 1, 1, 5000, 3);
  EXPECT_EQ(one.mean, 1.0);
  EXPECT_EQ(one.successes, 5000U);
  EXPECT_EQ(one.stderr_, 0.0);
  EXPECT_EQ(estimate(g, 8, 0, 5000, 3).mean, 1.0);
  EXPECT_EQ(estimate(g, 7, 0, 5000, 3).mean, 0.0);
}

TEST(Estimate, DeterministicAndWorkerIndependent) {
  const auto g = fixtures::cycle(6);
  const auto a = estimate(g, 2, mpq_class(1, 2), 20000, 42, 1);
  const auto b = estimate(g, 2, mpq_class(1, 2), 20000, 42, 1);
  const auto c = estimate(g, 2, mpq_class(1, 2), 20000, 42, 4);
  EXPECT_EQ(a.successes, b.successes);
  EXPECT_EQ(a.successes, c.successes);
  EXPECT_EQ(a.mean, c.mean);
  const auto d = estimate(g, 2, mpq_class(1, 2), 20000, 43, 1);
  EXPECT_NE(a.successes, d.successes);
  EXPECT_EQ(a.seed, 42U);
}

TEST(Estimate, StandardErrorFormula) {
  const auto e = estimate(fixtures::cycle(3), 1, mpq_class(1, 2), 10000, 9);
  EXPECT_DOUBLE_EQ(e.stderr_, std::sqrt(e.mean * (1 - e.mean) / 10000.0));
  EXPECT_GE(e.mean, 0.0);
  EXPECT_LE(e.mean, 1.0);
}

TEST(Estimate, TriangleMillionTrials) {
  const auto e = estimate(fixtures::cycle(3), 1, mpq_class(1, 2), 1'000'000, 2024);
  EXPECT_LE(std::abs(e.mean - 0.5), 4 * e.stderr_);
}

TEST(Estimate, MonotoneInK) {
  const auto g = fixtures::complete_minus_matching(6, 2);
  double previous = 0.0;
  for (int k = 1; k <= 6; ++k) {
    const auto e = estimate(g, k, mpq_class(1, 3), 20000, 5);
    // Same seed means the same percolation samples, so counts are monotone.
    EXPECT_GE(e.mean, previous);
    previous = e.mean;
  }
  EXPECT_EQ(previous, 1.0);
}

TEST(Estimate, RejectsBadInput) {
  const auto g = fixtures::cycle(3);
  EXPECT_THROW(estimate(g, 1, mpq_class(3, 2), 10, 1), std::invalid_argument);
  EXPECT_THROW(estimate(g, 0, mpq_class(1, 2), 10, 1), std::invalid_argument);
  EXPECT_THROW(estimate(g, 1, mpq_class(1, 2), 0, 1), std::invalid_argument);
}

TEST(CrossCheck, RandomConfigurations) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto g = oracle::random_connected_graph(rng, n, n - 1 + static_cast<int>(rng() % (n + 3)));
    const int k = 1 + static_cast<int>(rng() % n);
    const mpq_class p(1 + static_cast<long>(rng() % 9), 10);
    const auto r = cross_check(g, k, p, 100000, 1000 + trial, 4.0);
    EXPECT_TRUE(r.pass) << "config " << trial << " deviation " << r.deviation;
    const auto t = ntable_from_whitney(whitney(g), g.order(), g.size());
    EXPECT_EQ(r.exact, rel_eval(reliability(t, k), p));
  }
}

TEST(CrossCheck, NegativeControlFails) {
  const auto g = fixtures::cycle(5);
  const auto right = cross_check(g, 1, mpq_class(1, 2), 100000, 8, 4.0);
  EXPECT_TRUE(right.pass);
  const auto wrong = cross_check(g, 1, mpq_class(1, 2), 100000, 8, 4.0, right.exact + mpq_class(1, 20));
  EXPECT_FALSE(wrong.pass);
  EXPECT_GT(wrong.deviation, 4.0);
}

TEST(CrossCheck, SingleTrialIsVacuous) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(cross_check(fixtures::cycle(3), 1, mpq_class(1, 2), 1, seed, 4.0).pass);
  }
}

TEST(CrossCheck, DisconnectedGraphUsesBruteForce) {
  const SimpleGraph g(5, {{0, 1}, {1, 2}, {3, 4}});
  const auto r = cross_check(g, 2, mpq_class(1, 2), 50000, 3, 4.0);
  // Two components need all three edges present: (1/2)^3.
  EXPECT_EQ(r.exact, mpq_class(1, 8));
  EXPECT_TRUE(r.pass);
}

}  // namespace
}  // namespace graphrel
