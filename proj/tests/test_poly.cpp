#include <gtest/gtest.h>

#include <random>

#include "lfrep/errors.hpp"
#include "lfrep/io.hpp"
#include "lfrep/poly.hpp"

using namespace lfrep;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> exp(lo, hi);
  std::uniform_int_distribution<int> coef(-9, 9);
  LaurentPoly p;
  for (int i = 0; i < 4; ++i) p += LaurentPoly::monomial(coef(rng), exp(rng));
  return p;
}

BiPoly random_bipoly(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> exp(lo, hi);
  std::uniform_int_distribution<int> coef(-9, 9);
  BiPoly p;
  for (int i = 0; i < 5; ++i) p += BiPoly::monomial(coef(rng), exp(rng), exp(rng));
  return p;
}

}  // namespace

TEST(LaurentPoly, TextForm) {
  const LaurentPoly p = LaurentPoly::var(2) + LaurentPoly::monomial(6, 1) + 5;
  EXPECT_EQ(p.to_string(), "q^2 + 6*q + 5");
  EXPECT_EQ((LaurentPoly::monomial(-1, 1) + 1).to_string(), "-q + 1");
  EXPECT_EQ(LaurentPoly::var(-2).to_string(), "q^-2");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(LaurentPoly, ZeroCoefficientsVanish) {
  LaurentPoly p = LaurentPoly::var(3);
  p -= LaurentPoly::var(3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_THROW(p.degree(), InvalidArgument);
}

TEST(LaurentPoly, RingAxiomsRandom) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(rng, -3, 4);
    const LaurentPoly b = random_poly(rng, -3, 4);
    const LaurentPoly c = random_poly(rng, -3, 4);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, LaurentPoly());
    EXPECT_EQ(a.invert_variable().invert_variable(), a);
    EXPECT_EQ(a.shifted(3).shifted(-3), a);
  }
}

TEST(LaurentPoly, EvaluationIsAHomomorphism) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(rng, 0, 5);
    const LaurentPoly b = random_poly(rng, 0, 5);
    for (int x : {-3, 0, 2, 7}) {
      EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
      EXPECT_EQ((a + b).evaluate(x), a.evaluate(x) + b.evaluate(x));
      EXPECT_EQ(a.compose(b).evaluate(x), a.evaluate(b.evaluate(x)));
    }
  }
}

TEST(LaurentPoly, ExactDivision) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentPoly a = random_poly(rng, -2, 4);
    const LaurentPoly b = random_poly(rng, -2, 4);
    if (b.is_zero()) continue;
    EXPECT_EQ(divide_exact(a * b, b), a);
  }
  EXPECT_THROW(divide_exact(LaurentPoly::var() + 1, LaurentPoly::var() + 2), InternalError);
}

TEST(LaurentPoly, PowMatchesRepeatedProduct) {
  const LaurentPoly x = LaurentPoly::var() - 1;
  LaurentPoly acc = 1;
  for (unsigned n = 0; n < 8; ++n) {
    EXPECT_EQ(x.pow(n), acc);
    acc *= x;
  }
  EXPECT_EQ(x.pow(5).coeff(2), BigInt(-10));
}

TEST(LaurentPoly, Shape) {
  const LaurentPoly p = LaurentPoly::var(3) - LaurentPoly::monomial(2, 1);
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.low_degree(), 1);
  EXPECT_TRUE(p.is_monic());
  EXPECT_FALSE(p.has_nonnegative_coefficients());
  EXPECT_FALSE(LaurentPoly::var(-1).is_polynomial());
}

TEST(BiPoly, RingAxiomsRandom) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const BiPoly a = random_bipoly(rng, -2, 3);
    const BiPoly b = random_bipoly(rng, -2, 3);
    const BiPoly c = random_bipoly(rng, -2, 3);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a.invert_variables().invert_variables(), a);
    EXPECT_EQ(a.scale_second(2).scale_second(-2), a);
    EXPECT_EQ((a * b).invert_variables(), a.invert_variables() * b.invert_variables());
  }
}

TEST(BiPoly, EvaluateAgreesWithUnivariateSubstitution) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const BiPoly a = random_bipoly(rng, 0, 3);
    const BiPoly b = random_bipoly(rng, 0, 3);
    const LaurentPoly x = LaurentPoly::var() + 1;
    const LaurentPoly y = LaurentPoly::var(2) - 3;
    EXPECT_EQ((a * b).evaluate(x, y), a.evaluate(x, y) * b.evaluate(x, y));
    // T -> q^k T then T = 1 equals substituting q^k for T directly.
    EXPECT_EQ(a.scale_second(2).evaluate(LaurentPoly::var(), 1), a.evaluate(LaurentPoly::var(), LaurentPoly::var(2)));
  }
}

TEST(BiPoly, CoefficientExtraction) {
  const BiPoly p = parse_bipoly("2*q*T^2 + T^2 + q*T + 2*T");
  EXPECT_EQ(p.coeff_of_second(2), LaurentPoly::monomial(2, 1) + 1);
  EXPECT_EQ(p.coeff_of_second(1), LaurentPoly::var() + 2);
  EXPECT_EQ(p.coeff(1, 2), BigInt(2));
  EXPECT_EQ(p.max_second(), 2);
  EXPECT_EQ(p.min_first(), 0);
  EXPECT_EQ(parse_bipoly("6*q^2 + 9*T").content(), BigInt(3));
}

TEST(BiPoly, TextRoundTripRandom) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const BiPoly a = random_bipoly(rng, -3, 4);
    EXPECT_EQ(parse_bipoly(a.to_string()), a) << a.to_string();
    EXPECT_EQ(parse_bipoly(a.to_string("x", "y", TermOrder::graded), 'x', 'y'), a);
  }
}

TEST(Integers, BinomialMatchesPascal) {
  for (unsigned n = 1; n < 30; ++n)
    for (unsigned k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  EXPECT_EQ(binomial(5, 7), BigInt(0));
  EXPECT_EQ(ipow(BigInt(3), 40), BigInt("12157665459056928801"));
}
