#include <gtest/gtest.h>

#include <random>

#include "graph_oracle.hpp"
#include "lfrep/catalog.hpp"
#include "lfrep/errors.hpp"
#include "lfrep/toric.hpp"

using namespace lfrep;

namespace {

// Contracting the edges of depth > k removes exactly their nullity from b1,
// so delta is the sum of those nullities over k = 1..d-1.
LaurentPoly r_d_oracle(const oracle::Graph& o, std::uint64_t edges, int d) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < o.edges.size(); ++i)
    if ((edges >> i) & 1U) idx.push_back(static_cast<int>(i));
  std::vector<int> depth(idx.size(), 1);
  LaurentPoly out;
  while (true) {
    int delta = 0;
    for (int k = 1; k < d; ++k) {
      std::uint64_t deep = 0;
      for (std::size_t j = 0; j < idx.size(); ++j)
        if (depth[j] > k) deep |= 1ULL << idx[j];
      delta += o.nullity(deep);
    }
    out += LaurentPoly::var(delta);
    std::size_t j = 0;
    while (j < depth.size() && depth[j] == d) depth[j++] = 1;
    if (j == depth.size()) break;
    ++depth[j];
  }
  return out;
}

LaurentPoly a_d_oracle(const Multigraph& g, int d) {
  const oracle::Graph o(g);
  LaurentPoly out;
  for (std::uint64_t a = 0; a <= o.all(); ++a)
    if (o.components(a) == 1)
      out += (LaurentPoly::var() - 1).pow(static_cast<unsigned>(o.nullity(a))) * r_d_oracle(o, a, d);
  return out;
}

int bridge_count(const Multigraph& g) {
  const oracle::Graph o(g);
  const int base = o.components(o.all());
  int bridges = 0;
  for (std::size_t i = 0; i < o.edges.size(); ++i)
    if (o.components(o.all() & ~(1ULL << i)) > base) ++bridges;
  return bridges;
}

}  // namespace

TEST(Toric, RdMatchesOracleRandom) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 4, 5, false);
    const oracle::Graph o(g);
    for (int d = 1; d <= 3; ++d) EXPECT_EQ(r_d_polynomial(g, d), r_d_oracle(o, o.all(), d));
  }
}

TEST(Toric, AdMatchesOracleRandom) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 4, 5, true);
    for (int d = 1; d <= 3; ++d) EXPECT_EQ(a_d_polynomial(g, d), a_d_oracle(g, d));
  }
}

TEST(Toric, DepthOneAndTwoAreTutteSpecializations) {
  std::mt19937 rng(41);
  const LaurentPoly q = LaurentPoly::var();
  for (int trial = 0; trial < 60; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 4, 6, true);
    const BiPoly t = tutte(g);
    EXPECT_EQ(a_d_polynomial(g, 1), t.evaluate(1, q));
    EXPECT_EQ(r_d_polynomial(g, 2), t.evaluate(2, q + 1));
  }
}

TEST(Toric, TreesAndBouquets) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 4; ++d) {
      const BigInt leaves = ipow(d, static_cast<unsigned>(n - 1));
      EXPECT_EQ(a_d_polynomial(catalog::path(n), d), LaurentPoly(leaves));
      EXPECT_EQ(r_d_polynomial(catalog::path(n), d), LaurentPoly(leaves));
    }
  for (int m = 0; m <= 3; ++m)
    for (int d = 1; d <= 4; ++d) EXPECT_EQ(a_d_polynomial(catalog::bouquet(m), d), LaurentPoly::var(d * m));
}

TEST(Toric, CyclicClosedForm) {
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= 4; ++d) {
      const LaurentPoly want = a_d_oracle(catalog::cycle(n), d);
      EXPECT_EQ(a_d_cyclic_closed_form(n, d), want) << "n=" << n << " d=" << d;
      EXPECT_EQ(a_d_polynomial(catalog::cycle(n), d), want);
    }
  // C3 at d = 2.
  EXPECT_EQ(a_d_polynomial(catalog::cycle(3), 2), LaurentPoly::var(2) + LaurentPoly::monomial(6, 1) + 5);
}

TEST(Toric, ShapePropertiesRandom) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 4, 6, true);
    const int betti = b1(g);
    const BigInt trees = spanning_tree_count(g);
    for (int d = 1; d <= 3; ++d) {
      const LaurentPoly a = a_d_polynomial(g, d);
      const LaurentPoly r = r_d_polynomial(g, d);
      const BigInt lead = ipow(BigInt(d), static_cast<unsigned>(bridge_count(g)));
      EXPECT_EQ(a.degree(), d * betti);
      EXPECT_EQ(a.coeff(a.degree()), lead);
      EXPECT_EQ(r.degree(), (d - 1) * betti);
      EXPECT_EQ(r.coeff(r.degree()), lead);
      EXPECT_TRUE(r.has_nonnegative_coefficients());
      EXPECT_EQ(r.evaluate(1), ipow(BigInt(d), static_cast<unsigned>(g.edge_count())));
      EXPECT_EQ(a.evaluate(1), ipow(BigInt(d), static_cast<unsigned>(g.vertex_count() - 1)) * trees);
    }
  }
}

TEST(Toric, BridgeBreaksMonicity) {
  // Two double edges joined by a bridge.
  Multigraph g(4);
  g.add_edge(1, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(3, 4);
  EXPECT_EQ(a_d_polynomial(g, 2), LaurentPoly(2) * (LaurentPoly::var() + 1).pow(4));
  EXPECT_EQ(a_d_polynomial(catalog::path(2), 3), LaurentPoly(3));
}

TEST(Toric, DepthZero) {
  EXPECT_EQ(a_d_polynomial(catalog::bouquet(2), 0), LaurentPoly(1));
  EXPECT_EQ(a_d_polynomial(catalog::path(2), 0), LaurentPoly());
  EXPECT_EQ(r_d_polynomial(catalog::point(), 0), LaurentPoly(1));
  EXPECT_THROW(a_d_polynomial(catalog::path(2), -1), InvalidArgument);
}

TEST(Toric, DisconnectedGraphRejected) {
  EXPECT_THROW(a_d_polynomial(Multigraph(2), 2), InvalidArgument);
}

TEST(Toric, DepthFunctionGuard) {
  Limits tight;
  tight.max_depth_functions = 10;
  EXPECT_THROW(r_d_polynomial(catalog::cycle(4), 2, tight), GuardExceeded);
}

TEST(Toric, StabilizerOrdersOnTriangle) {
  const Multigraph c3 = catalog::cycle(3);
  DepthFunction units{2, {}};
  DepthFunction all_t{2, {}};
  for (const Edge& e : c3.edges()) {
    units.values[e.id] = 2;
    all_t.values[e.id] = 1;
  }
  // Invertible labels: stabilizer q(q-1).
  EXPECT_EQ(toric_type_orbit_data(c3, units, 2).stabilizer_order, BigInt(2));
  // Every label in t*k: stabilizer q^3(q-1).
  EXPECT_EQ(toric_type_orbit_data(c3, all_t, 2).stabilizer_order, BigInt(8));
  const auto sym = toric_type_orbit_data(c3, units);
  EXPECT_EQ(sym.orbit_count, LaurentPoly::var(delta(c3, units)) * (LaurentPoly::var() - 1));
  EXPECT_EQ(delta(c3, units), 1);
  EXPECT_EQ(delta(c3, all_t), 0);
  EXPECT_THROW(toric_type_orbit_data(c3, units, 6), InvalidArgument);
}

TEST(Toric, OrbitDataConsistentRandom) {
  // The library cross-checks the orbit count against (q-1)^b1 q^delta and the
  // stabilizer rank against a contraction count; neither may throw.
  std::mt19937 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 4, 5, true);
    for (int d = 1; d <= 3; ++d) {
      DepthFunction r{d, {}};
      for (const Edge& e : g.edges()) r.values[e.id] = std::uniform_int_distribution<int>(1, d)(rng);
      EXPECT_NO_THROW(toric_type_orbit_data(g, r));
    }
  }
}

TEST(Toric, PrimePowers) {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 27, 49}) EXPECT_TRUE(is_prime_power(q)) << q;
  for (int q : {0, 1, 6, 10, 12, 15, 36}) EXPECT_FALSE(is_prime_power(q)) << q;
}
