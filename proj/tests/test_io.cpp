#include <gtest/gtest.h>

#include <random>

#include "graph_oracle.hpp"
#include "lfrep/catalog.hpp"
#include "lfrep/errors.hpp"
#include "lfrep/genfun.hpp"
#include "lfrep/io.hpp"

using namespace lfrep;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_quiver(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(QuiverFormat, Parses) {
  const Quiver q = parse_quiver(
      "# triangle\n"
      "vertices 3\n"
      "\n"
      "edge 1 2\n"
      "edge 2 3   # trailing comment\n"
      "edge 3 1\n");
  EXPECT_EQ(q.vertex_count(), 3);
  ASSERT_EQ(q.arrow_count(), 3U);
  EXPECT_EQ(q.source(2), 2);
  EXPECT_EQ(q.target(2), 3);
  EXPECT_EQ(q.arrows()[2].id, 3);
  EXPECT_EQ(parse_quiver("vertices 1\nedge 1 1\n").graph(), catalog::bouquet(1));
}

TEST(QuiverFormat, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("vertices 2\nedge 1 3\n"), 2);
  EXPECT_EQ(parse_error_line("vertices 2\n\narrow 1 2\n"), 3);
  EXPECT_EQ(parse_error_line("vertices 2\nvertices 3\n"), 2);
  EXPECT_EQ(parse_error_line("edge 1 2\n"), 1);
  EXPECT_EQ(parse_error_line("vertices 2\nedge 1\n"), 2);
  EXPECT_EQ(parse_error_line("vertices x\n"), 1);
  EXPECT_EQ(parse_error_line("vertices 0\n"), 1);
  EXPECT_NE(parse_error_line("# nothing\n"), -1);
  try {
    parse_quiver("vertices 2\nedge 1 3\n");
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()), "line 2: vertex 3 out of range 1..2");
  }
}

TEST(QuiverFormat, RoundTripRandom) {
  std::mt19937 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const Quiver q(oracle::random_multigraph(rng, 5, 7, false));
    EXPECT_EQ(parse_quiver(format_quiver(q)), q) << format_quiver(q);
  }
}

TEST(RingSpec, Examples) {
  struct Row {
    std::string spec;
    int dim;
    std::uint64_t residue;
    bool field;
  };
  const std::vector<Row> rows = {
      {"fq(2)", 1, 2, true},           {"fq(3,2)", 2, 9, true},         {"kd(fq(2),2)", 2, 2, false},
      {"kd(fq(2,2),3)", 6, 4, false},  {"eps(fq(2))", 2, 2, false},     {"eps(kd(fq(3),2))", 4, 3, false},
      {"sqz(fq(2),2)", 3, 2, false},   {" kd( fq(5) , 2 ) ", 2, 5, false},
  };
  for (const Row& row : rows) {
    const FiniteAlgebra R = parse_ring(row.spec);
    EXPECT_EQ(R.dim(), row.dim) << row.spec;
    EXPECT_EQ(R.residue_size(), row.residue) << row.spec;
    EXPECT_EQ(R.is_field(), row.field) << row.spec;
    EXPECT_TRUE(R.satisfies_axioms());
  }
}

TEST(RingSpec, Rejects) {
  for (const char* bad : {"fq(4)", "fq(6)", "kd(eps(fq(2)),2)", "sqz(kd(fq(2),2),2)", "fq(2", "zz(2)", "kd(fq(2),0)",
                          "fq(2))", ""})
    EXPECT_THROW(parse_ring(bad), ParseError) << bad;
}

TEST(RankVector, Parses) {
  EXPECT_EQ(parse_rank_vector("1,2,1"), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(parse_rank_vector("0"), (std::vector<int>{0}));
  for (const char* bad : {"", "1,", "1,-2", "a", "1,,2"}) EXPECT_THROW(parse_rank_vector(bad), ParseError) << bad;
}

TEST(PolyText, Parses) {
  EXPECT_EQ(parse_poly("q^2 + 6*q + 5"), LaurentPoly::var(2) + LaurentPoly::monomial(6, 1) + 5);
  EXPECT_EQ(parse_poly("0"), LaurentPoly());
  EXPECT_EQ(parse_poly("-q^-1"), LaurentPoly::monomial(-1, -1));
  EXPECT_EQ(parse_bipoly("3*q^2*T - T^-1"), BiPoly::monomial(3, 2, 1) - BiPoly::monomial(1, 0, -1));
  EXPECT_EQ(parse_bipoly("2*x*y", 'x', 'y'), BiPoly::monomial(2, 1, 1));
  EXPECT_THROW(parse_poly("q*T"), ParseError);
  EXPECT_THROW(parse_bipoly("(q+1)"), ParseError);
  EXPECT_THROW(parse_bipoly("q^"), ParseError);
}

TEST(Json, Schema) {
  const auto p = json_out::poly(parse_poly("q^2 - 3"));
  EXPECT_EQ(p, (nlohmann::json{{"2", "1"}, {"0", "-3"}}));
  const auto b = json_out::bipoly(parse_bipoly("q*T^2 + 5"));
  EXPECT_EQ(b, (nlohmann::json{{"1,2", "1"}, {"0,0", "5"}}));
  EXPECT_EQ(json_out::count(BigInt("123456789012345678901234567890")), "123456789012345678901234567890");
  const auto f = json_out::ratfun(a_genfun(catalog::dipole(2)));
  ASSERT_TRUE(f.contains("num"));
  ASSERT_TRUE(f.contains("den"));
  // (q+1)T / ((1-T)(1-qT)).
  EXPECT_EQ(f["num"], (nlohmann::json{{"1,1", "1"}, {"0,1", "1"}}));
  EXPECT_EQ(f["den"], (nlohmann::json{{"0,0", "1"}, {"0,1", "-1"}, {"1,1", "-1"}, {"1,2", "1"}}));
}
