#include <gtest/gtest.h>

#include <random>

#include "graph_oracle.hpp"
#include "lfrep/catalog.hpp"
#include "lfrep/errors.hpp"
#include "lfrep/genfun.hpp"
#include "lfrep/io.hpp"
#include "lfrep/toric.hpp"

using namespace lfrep;

namespace {

RatFunQT rf(const std::string& num, RatFunQT::Factors den) { return RatFunQT(parse_bipoly(num), std::move(den)); }

Multigraph c2() { return catalog::dipole(2); }

}  // namespace

TEST(GenFun, SmallGraphTable) {
  struct Row {
    Multigraph g;
    RatFunQT r;
    RatFunQT a;
  };
  const std::vector<Row> rows = {
      {catalog::point(), rf("1", {{0, 1}}), rf("1", {{0, 1}})},
      {catalog::bouquet(1), rf("T", {{0, 1}, {1, 1}}), rf("1", {{1, 1}})},
      {catalog::path(2), rf("T", {{0, 2}}), rf("T", {{0, 2}})},
      {c2(), rf("T^2 + T", {{0, 2}, {1, 1}}), rf("q*T + T", {{0, 1}, {1, 1}})},
      {catalog::dipole(3), rf("q*T^3 + 2*q*T^2 + 2*T^2 + T", {{0, 2}, {1, 1}, {2, 1}}),
       rf("q^2*T + q*T + T", {{0, 1}, {2, 1}})},
      {catalog::cycle(3), rf("T^3 + 4*T^2 + T", {{0, 3}, {1, 1}}), rf("2*q*T^2 + T^2 + q*T + 2*T", {{0, 2}, {1, 1}})},
  };
  for (const Row& row : rows) {
    EXPECT_EQ(r_genfun(row.g), row.r) << r_genfun(row.g).to_factored_string();
    EXPECT_EQ(a_genfun(row.g), row.a) << a_genfun(row.g).to_factored_string();
  }
}

TEST(GenFun, SeriesCoefficientsAreTheToricPolynomialsRandom) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 4, 5, true);
    const RatFunQT a = a_genfun(g);
    const RatFunQT r = r_genfun(g);
    for (int d = 0; d <= 4; ++d) {
      EXPECT_EQ(a.series_coefficient(d), a_d_polynomial(g, d)) << "d=" << d;
      EXPECT_EQ(r.series_coefficient(d), r_d_polynomial(g, d)) << "d=" << d;
    }
  }
}

TEST(GenFun, RecursiveAndFiltrationFormsAgreeRandom) {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 4, 5, false);
    EXPECT_EQ(r_genfun_recursive(g), r_genfun(g));
    EXPECT_TRUE(check_recursion(g));
  }
}

TEST(GenFun, DualityRandom) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 4, 5, true);
    EXPECT_TRUE(check_duality(g, DualityForm::a));
    EXPECT_TRUE(check_duality(g, DualityForm::r));
  }
  EXPECT_THROW(check_duality(Multigraph(2), DualityForm::a), InvalidArgument);
}

TEST(GenFun, DualityByHandOnTwoCycle) {
  // A(C2) under T -> 1/T equals A(C2) for an even vertex count.
  const RatFunQT a = a_genfun(c2());
  EXPECT_EQ(a.inverted(), a);
  // R(C2) under T -> 1/T equals -q R(C2): |E| - 1 = 1, b1 = 1.
  const RatFunQT r = r_genfun(c2());
  EXPECT_EQ(r.inverted(), RatFunQT(BiPoly::monomial(-1, 1, 0)) * r);
}

TEST(GenFun, CVectorTerm) {
  // c = (0, c_1, ..., c_l) gives q^{c_2 + ... + c_l} T^l / prod_{i=0}^{l} (1 - q^{c_i} T).
  EXPECT_EQ(r_of_cvector({0}), RatFunQT::geometric(0));
  EXPECT_EQ(r_of_cvector({0, 1}), rf("T", {{0, 1}, {1, 1}}));
  EXPECT_EQ(r_of_cvector({0, 0, 1}), rf("q*T^2", {{0, 2}, {1, 1}}));
  EXPECT_THROW(r_of_cvector({}), InvalidArgument);
  EXPECT_THROW(r_of_cvector({1}), InvalidArgument);
  const Multigraph g = catalog::cycle(3);
  for (const auto& f : strict_filtrations(g.all_edges())) {
    const CVector c = cvector_of_filtration(g, f);
    EXPECT_EQ(c.size(), f.length() + 1);
    for (int x : c) EXPECT_TRUE(x == 0 || x == 1);
  }
}

TEST(GenFun, QEulerian) {
  EXPECT_EQ(q_pochhammer(2), parse_bipoly("1 - T - q*T + q*T^2"));
  EXPECT_EQ(q_eulerian(0), BiPoly(1));
  EXPECT_EQ(q_eulerian(2), parse_bipoly("q*T + 1"));
  // F_m / (T)_{m+1} has T^d coefficient [d+1]_q^m, and F_m(1, 1) = m!.
  BigInt factorial = 1;
  for (int m = 1; m <= 4; ++m) {
    factorial *= m;
    RatFunQT f(q_eulerian(m));
    for (int i = 0; i <= m; ++i) f = f * RatFunQT::geometric(i);
    for (int d = 0; d <= 5; ++d) {
      LaurentPoly bracket;
      for (int i = 0; i <= d; ++i) bracket += LaurentPoly::var(i);
      EXPECT_EQ(f.series_coefficient(d), bracket.pow(static_cast<unsigned>(m)));
    }
    EXPECT_EQ(q_eulerian(m).evaluate(1, 1), LaurentPoly(factorial));
  }
}

TEST(GraphChars, ConvolutionIdentityAndDepthSteps) {
  std::mt19937 rng(67);
  const GraphChar eps = chars::epsilon();
  std::vector<Multigraph> graphs;
  for (int i = 0; i < 15; ++i) graphs.push_back(oracle::random_multigraph(rng, 3, 4, false));
  const GraphChar r2 = chars::r_d(2);
  const GraphChar left = convolve(eps, r2);
  const GraphChar right = convolve(r2, eps);
  for (int d = 1; d <= 2; ++d) {
    const GraphChar step = convolve(chars::psi(d), chars::r_d(d));
    for (const Multigraph& g : graphs) EXPECT_EQ(step(g), r_d_polynomial(g, d + 1));
  }
  const GraphChar inv = convolve(chars::psi(1), chars::signed_psi(1));
  for (const Multigraph& g : graphs) {
    EXPECT_EQ(left(g), r2(g));
    EXPECT_EQ(right(g), r2(g));
    EXPECT_EQ(inv(g), eps(g));
    EXPECT_EQ(chars::psi(0)(g), LaurentPoly(1));
    EXPECT_EQ(chars::r_d(1)(g), LaurentPoly(1));
    EXPECT_EQ(chars::psi(2)(g), LaurentPoly::var(2 * b1(g)));
  }
  EXPECT_EQ(chars::epsilon1()(catalog::bouquet(2)), LaurentPoly(1));
  EXPECT_EQ(chars::epsilon1()(catalog::path(2)), LaurentPoly());
}

TEST(GenFun, EdgeGuard) {
  Limits tight;
  tight.max_edges = 3;
  EXPECT_THROW(r_genfun(catalog::cycle(5), tight), GuardExceeded);
}
