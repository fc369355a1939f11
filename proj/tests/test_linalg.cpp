#include <gtest/gtest.h>

#include <random>

#include "lfrep/linalg.hpp"

using namespace lfrep;

namespace {

ModMatrix random_matrix(std::mt19937& rng, Residue p) {
  const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  ModMatrix m(rows, cols, p);
  std::uniform_int_distribution<Residue> entry(0, p - 1);
  // Sparse-ish so low ranks show up.
  std::bernoulli_distribution zero(0.4);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = zero(rng) ? 0 : entry(rng);
  return m;
}

bool solves(const ModMatrix& m, const std::vector<Residue>& x) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::uint64_t{m.at(i, j)} * x[j];
    if (s % m.modulus() != 0) return false;
  }
  return true;
}

std::uint64_t brute_solutions(const ModMatrix& m) {
  std::vector<Residue> x(m.cols(), 0);
  std::uint64_t count = 0;
  while (true) {
    count += solves(m, x);
    std::size_t j = 0;
    while (j < x.size() && x[j] == m.modulus() - 1) x[j++] = 0;
    if (j == x.size()) break;
    ++x[j];
  }
  return count;
}

}  // namespace

TEST(Linalg, NullityCountsSolutionsRandom) {
  std::mt19937 rng(71);
  for (Residue p : {2U, 3U, 5U, 7U})
    for (int trial = 0; trial < 60; ++trial) {
      const ModMatrix m = random_matrix(rng, p);
      std::uint64_t expect = 1;
      for (std::size_t i = 0; i < nullity(m); ++i) expect *= p;
      EXPECT_EQ(brute_solutions(m), expect);
      EXPECT_LE(rank(m), std::min(m.rows(), m.cols()));
    }
}

TEST(Linalg, NullspaceBasisRandom) {
  std::mt19937 rng(73);
  for (Residue p : {2U, 3U, 5U})
    for (int trial = 0; trial < 60; ++trial) {
      const ModMatrix m = random_matrix(rng, p);
      const auto basis = nullspace_basis(m);
      EXPECT_EQ(basis.size(), nullity(m));
      for (const auto& v : basis) EXPECT_TRUE(solves(m, v));
      // Independent: stacking the basis as rows gives full rank.
      if (basis.empty()) continue;
      ModMatrix b(basis.size(), m.cols(), p);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) b.at(i, j) = basis[i][j];
      EXPECT_EQ(rank(b), basis.size());
    }
}

TEST(Linalg, AddReducesAnyRepresentative) {
  ModMatrix m(1, 1, 5);
  m.add(0, 0, -1);
  EXPECT_EQ(m.at(0, 0), 4U);
  m.add(0, 0, 13);
  EXPECT_EQ(m.at(0, 0), 2U);
}

TEST(Linalg, RowReducePivots) {
  ModMatrix m(2, 3, 3);
  m.at(0, 1) = 2;
  m.at(1, 1) = 1;
  m.at(1, 2) = 1;
  EXPECT_EQ(m.row_reduce(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(m.at(0, 1), 1U);
  EXPECT_EQ(m.at(0, 2), 0U);
}

TEST(Linalg, ModularInverses) {
  for (Residue p : {2U, 3U, 5U, 7U, 11U, 101U})
    for (Residue a = 1; a < p; ++a) EXPECT_EQ(std::uint64_t{a} * inverse_mod(a, p) % p, 1U);
  for (std::uint64_t n = 0; n < 500; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    EXPECT_EQ(is_prime(n), prime) << n;
  }
  EXPECT_TRUE(is_prime(65537));
  EXPECT_FALSE(is_prime(65535));
}
