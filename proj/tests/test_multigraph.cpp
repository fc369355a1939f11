#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "graph_oracle.hpp"
#include "lfrep/catalog.hpp"
#include "lfrep/errors.hpp"
#include "lfrep/multigraph.hpp"

using namespace lfrep;

namespace {

EdgeSubset subset_of(const Multigraph& g, std::uint64_t mask) {
  std::vector<EdgeId> ids;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if ((mask >> i) & 1U) ids.push_back(g.edges()[i].id);
  return EdgeSubset(ids);
}

// T(x, y) = sum over subsets A of (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}.
BiPoly tutte_by_rank(const Multigraph& g) {
  const oracle::Graph o(g);
  const int full = o.rank(o.all());
  const BiPoly x1 = BiPoly::monomial(1, 1, 0) - BiPoly(1);
  const BiPoly y1 = BiPoly::monomial(1, 0, 1) - BiPoly(1);
  BiPoly out;
  for (std::uint64_t a = 0; a <= o.all(); ++a) {
    BiPoly term(1);
    for (int i = 0; i < full - o.rank(a); ++i) term = term * x1;
    for (int i = 0; i < o.nullity(a); ++i) term = term * y1;
    out += term;
  }
  return out;
}

Multigraph relabeled(const Multigraph& g, std::mt19937& rng) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  Multigraph h(g.vertex_count());
  for (const Edge& e : edges) h.add_edge(perm[e.u - 1], perm[e.v - 1]);
  return h;
}

}  // namespace

TEST(Multigraph, RejectsBadEdges) {
  Multigraph g(2);
  EXPECT_THROW(g.add_edge(1, 3), InvalidArgument);
  g.add_edge(7, 1, 2);
  EXPECT_THROW(g.add_edge(7, 2, 2), InvalidArgument);
  EXPECT_EQ(g.add_edge(1, 1), 8);
}

TEST(Multigraph, FirstBettiNumberRandom) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 5, 7, false);
    const oracle::Graph o(g);
    EXPECT_EQ(b1(g), o.b1());
    EXPECT_EQ(component_count(g), o.components(o.all()));
  }
  EXPECT_EQ(b1(catalog::bouquet(3)), 3);
  EXPECT_EQ(b1(catalog::cycle(5)), 1);
  EXPECT_EQ(b1(catalog::path(4)), 0);
}

TEST(Multigraph, MinorsRandom) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 5, 7, true);
    const oracle::Graph o(g);
    const std::uint64_t mask = std::uniform_int_distribution<std::uint64_t>(0, o.all())(rng);
    const EdgeSubset a = subset_of(g, mask);
    const Multigraph c = contract(g, a);
    EXPECT_EQ(c.vertex_count(), o.components(mask));
    EXPECT_EQ(c.edge_count(), g.edge_count() - a.size());
    EXPECT_EQ(b1(c), o.b1() - o.nullity(mask));
    const Multigraph s = spanning_subgraph(g, a);
    EXPECT_EQ(s.vertex_count(), g.vertex_count());
    EXPECT_EQ(b1(s), o.nullity(mask));
    EXPECT_EQ(delete_edges(g, a), spanning_subgraph(g, g.all_edges() - a));
  }
}

TEST(Multigraph, ConnectedSpanningSubgraphsRandom) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 4, 6, true);
    const oracle::Graph o(g);
    std::set<EdgeSubset> want;
    for (std::uint64_t a = 0; a <= o.all(); ++a)
      if (o.components(a) == 1) want.insert(subset_of(g, a));
    const auto got = connected_spanning_subgraphs(g);
    EXPECT_EQ(std::set<EdgeSubset>(got.begin(), got.end()), want);
    EXPECT_EQ(got.size(), want.size());
  }
}

TEST(Multigraph, StrictFiltrationsCountOrderedSetPartitions) {
  const std::vector<int> fubini = {1, 1, 3, 13, 75, 541};
  for (unsigned m = 0; m < fubini.size(); ++m) {
    EXPECT_EQ(ordered_bell(m), BigInt(fubini[m]));
    const Multigraph g = catalog::bouquet(static_cast<int>(m));
    const auto fs = strict_filtrations(g.all_edges());
    EXPECT_EQ(BigInt(static_cast<unsigned long>(fs.size())), ordered_bell(m));
    for (const auto& f : fs) {
      EXPECT_NO_THROW(f.validate(g.all_edges()));
      if (m > 0) EXPECT_EQ(f.chain.back(), g.all_edges());
    }
  }
}

TEST(Multigraph, StrictFiltrationValidation) {
  StrictFiltration f;
  f.chain = {EdgeSubset{1}, EdgeSubset{1}};
  EXPECT_THROW(f.validate(EdgeSubset{1}), InvalidArgument);
}

TEST(Multigraph, SpanningTreesRandom) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 150; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 5, 8, true);
    const oracle::Graph o(g);
    long trees = 0;
    for (std::uint64_t a = 0; a <= o.all(); ++a)
      if (std::popcount(a) == g.vertex_count() - 1 && o.components(a) == 1) ++trees;
    EXPECT_EQ(spanning_tree_count(g), BigInt(trees));
  }
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(spanning_tree_count(catalog::cycle(n)), BigInt(n));
    EXPECT_EQ(spanning_tree_count(catalog::dipole(n)), BigInt(n));
  }
}

TEST(Multigraph, TutteMatchesRankExpansionRandom) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 4, 7, true);
    const BiPoly t = tutte(g);
    EXPECT_EQ(t, tutte_by_rank(g));
    EXPECT_EQ(t.evaluate(1, 1), LaurentPoly(spanning_tree_count(g)));
    std::vector<EdgeId> order = g.edge_ids();
    std::shuffle(order.begin(), order.end(), rng);
    EXPECT_EQ(tutte(g, order), t);
  }
  // C3: x^2 + x + y.
  EXPECT_EQ(tutte(catalog::cycle(3)),
            BiPoly::monomial(1, 2, 0) + BiPoly::monomial(1, 1, 0) + BiPoly::monomial(1, 0, 1));
}

TEST(Catalog, CanonicalKeyIsALabelInvariant) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 4, 5, true);
    EXPECT_EQ(catalog::canonical_key(g), catalog::canonical_key(relabeled(g, rng)));
  }
  EXPECT_NE(catalog::canonical_key(catalog::cycle(3)), catalog::canonical_key(catalog::path(3)));
}

TEST(Catalog, EnumerationIsCompleteAndIrredundant) {
  const auto graphs = catalog::connected_multigraphs(4);
  std::set<std::vector<std::pair<int, int>>> keys;
  for (const auto& g : graphs) {
    EXPECT_TRUE(is_connected(g));
    EXPECT_LE(g.edge_count(), 4U);
    keys.insert(catalog::canonical_key(g));
  }
  EXPECT_EQ(keys.size(), graphs.size());
  // Every random connected graph with at most 4 edges appears.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Multigraph g = oracle::random_multigraph(rng, 5, 4, true);
    if (g.edge_count() > 4) continue;
    EXPECT_TRUE(keys.count(catalog::canonical_key(g)));
  }
}

TEST(Catalog, Builtins) {
  EXPECT_EQ(catalog::builtin("C3"), catalog::cycle(3));
  EXPECT_EQ(catalog::builtin("point").vertex_count(), 1);
  EXPECT_EQ(catalog::builtin("Sm:2"), catalog::bouquet(2));
  EXPECT_THROW(catalog::builtin("nope"), InvalidArgument);
}

TEST(Quiver, ReorientationIsAnInvolution) {
  const Quiver q(catalog::cycle(3));
  for (const auto& flip : catalog::orientation_flips(q.graph())) {
    const Quiver r = q.reoriented(flip);
    EXPECT_EQ(r.reoriented(flip), q);
    for (EdgeId e : flip.members()) EXPECT_EQ(r.source(e), q.target(e));
  }
  EXPECT_EQ(catalog::orientation_flips(q.graph()).size(), 8U);
}
