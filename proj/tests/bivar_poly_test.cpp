#include <random>

#include <gtest/gtest.h>

#include "graphrel/bivar_poly.hpp"

namespace graphrel {
namespace {

BivarPoly random_poly(std::mt19937_64& rng, int terms, int max_deg = 6) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coef(-20, 20);
  BivarPoly p;
  for (int t = 0; t < terms; ++t) p.add_term(deg(rng), deg(rng), coef(rng));
  return p;
}

const BivarPoly kX = BivarPoly::x();
const BivarPoly kY = BivarPoly::y();
const BivarPoly kOne = BivarPoly::constant(1);

TEST(BivarPoly, Arithmetic) {
  EXPECT_EQ((kOne - kX * kY) * (kOne + kX * kY), kOne - BivarPoly::monomial(2, 2));
  const auto p = kX + kY;
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).term_count(), 0U);
  EXPECT_EQ(p * p, BivarPoly::monomial(2, 0) + BivarPoly::monomial(1, 1, 2) + BivarPoly::monomial(0, 2));
}

TEST(BivarPoly, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng, 8);
    const auto b = random_poly(rng, 8);
    const auto c = random_poly(rng, 8);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * kOne, a);
    EXPECT_TRUE((a * BivarPoly()).is_zero());
    EXPECT_EQ(-(-a), a);
  }
}

TEST(BivarPoly, NoZeroCoefficientsStored) {
  BivarPoly p = BivarPoly::monomial(2, 1, 3);
  p.add_term(2, 1, -3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE((BivarPoly::monomial(1, 1) * mpz_class(0)).is_zero());
  EXPECT_TRUE(BivarPoly::constant(0).is_zero());
}

TEST(BivarPoly, Shift) {
  EXPECT_EQ(BivarPoly::monomial(2, 0).shifted(1, 0), BivarPoly::monomial(2, 0) + kX * mpz_class(2) + kOne);
  EXPECT_EQ((kX * kY).shifted(1, 0), kX * kY + kY);
  EXPECT_EQ(kOne.shifted(3, -2), kOne);
}

TEST(BivarPoly, ShiftRoundTrip) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = random_poly(rng, 20);
    const int dx = d(rng);
    const int dy = d(rng);
    EXPECT_EQ(p.shifted(dx, dy).shifted(-dx, -dy), p);
  }
}

TEST(BivarPoly, ShiftAgreesWithEvaluation) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng, 10);
    const mpq_class x0(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
    const mpq_class y0(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
    EXPECT_EQ(p.shifted(1, -2).evaluate(x0, y0), p.evaluate(x0 + 1, y0 - 2));
  }
}

TEST(BivarPoly, Evaluate) {
  EXPECT_EQ((kOne - kX * kY).evaluate(mpq_class(1, 2), mpq_class(1, 2)), mpq_class(3, 4));
  EXPECT_EQ((BivarPoly::monomial(2, 0) + kX + kY).evaluate(1, 2), mpq_class(4));
  const auto p = parse_poly("3x^2y - 7x + 11");
  EXPECT_EQ(p.evaluate(0, 0), mpq_class(11));
}

TEST(BivarPoly, EvaluationIsMultiplicative) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng, 6);
    const auto b = random_poly(rng, 6);
    const mpq_class x0(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 5));
    const mpq_class y0(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 5));
    EXPECT_EQ((a * b).evaluate(x0, y0), a.evaluate(x0, y0) * b.evaluate(x0, y0));
    EXPECT_EQ((a + b).evaluate(x0, y0), a.evaluate(x0, y0) + b.evaluate(x0, y0));
  }
}

TEST(BivarPoly, CoefficientQueries) {
  EXPECT_EQ((kOne - kX * kY).coeff(1, 1), -1);
  EXPECT_EQ((kOne - kX * kY).coeff(5, 5), 0);
  const auto w = parse_poly("x^2 + 3x + y + 3");
  EXPECT_TRUE(w.is_nonnegative());
  EXPECT_FALSE((kOne - kX * kY).is_nonnegative());
  EXPECT_TRUE(BivarPoly().is_nonnegative());
  const auto slice = w.y_zero_slice();
  ASSERT_EQ(slice.size(), 3U);
  EXPECT_EQ(slice[0], 3);
  EXPECT_EQ(slice[1], 3);
  EXPECT_EQ(slice[2], 1);
  EXPECT_EQ(w.degree_x(), 2);
  EXPECT_EQ(w.degree_y(), 1);
}

TEST(BivarPoly, HugeCoefficientsStayExact) {
  BivarPoly p = kX + kOne;
  BivarPoly acc = kOne;
  for (int i = 0; i < 80; ++i) acc = acc * p;
  mpz_class expected;
  mpz_bin_uiui(expected.get_mpz_t(), 80, 40);
  EXPECT_EQ(acc.coeff(40, 0), expected);
  EXPECT_GT(expected, mpz_class("1000000000000000000000"));
}

TEST(BivarPoly, ToStringAndParseRoundTrip) {
  EXPECT_EQ(parse_poly("x^2 + 3x + y + 3").to_string(), "x^2 + 3*x + y + 3");
  EXPECT_EQ(BivarPoly().to_string(), "0");
  EXPECT_EQ((-kX).to_string(), "-x");
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly(rng, 10);
    EXPECT_EQ(parse_poly(p.to_string()), p);
  }
}

TEST(BivarPoly, ParseAcceptsBothSpellings) {
  EXPECT_EQ(parse_poly("4xy^5 - 8y^3 - 4"), parse_poly("4*x*y^5 - 8*y^3 - 4"));
  EXPECT_EQ(parse_poly("-x + x"), BivarPoly());
  EXPECT_THROW(parse_poly("x^"), std::invalid_argument);
  EXPECT_THROW(parse_poly("3z"), std::invalid_argument);
  EXPECT_THROW(parse_poly(""), std::invalid_argument);
}

}  // namespace
}  // namespace graphrel
