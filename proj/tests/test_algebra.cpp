#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "lfrep/algebra.hpp"
#include "lfrep/catalog.hpp"
#include "lfrep/errors.hpp"
#include "lfrep/repenum.hpp"

using namespace lfrep;

namespace {

using Elem = FiniteAlgebra::Elem;

std::vector<FiniteAlgebra> small_rings() {
  const FiniteAlgebra f2 = FiniteAlgebra::fq(2);
  const FiniteAlgebra f3 = FiniteAlgebra::fq(3);
  return {f2,
          f3,
          FiniteAlgebra::fq(5),
          FiniteAlgebra::fq(2, 2),
          FiniteAlgebra::fq(3, 2),
          FiniteAlgebra::truncated(f2, 2),
          FiniteAlgebra::truncated(f2, 3),
          FiniteAlgebra::truncated(f3, 2),
          FiniteAlgebra::truncated(FiniteAlgebra::fq(2, 2), 2),
          FiniteAlgebra::dual_numbers(f2),
          FiniteAlgebra::dual_numbers(FiniteAlgebra::truncated(f2, 2)),
          FiniteAlgebra::square_zero(f2, 2),
          FiniteAlgebra::square_zero(f3, 2)};
}

AlgMatrix random_matrix(const FiniteAlgebra& R, int n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, R.size() - 1);
  AlgMatrix m(n, n);
  for (auto& x : m.a) x = static_cast<Elem>(pick(rng));
  return m;
}

BigInt gl_order_over_field(std::uint64_t q, int n) {
  BigInt out = 1;
  const BigInt qn = ipow(BigInt(static_cast<unsigned long>(q)), static_cast<unsigned>(n));
  for (int i = 0; i < n; ++i) out *= qn - ipow(BigInt(static_cast<unsigned long>(q)), static_cast<unsigned>(i));
  return out;
}

}  // namespace

TEST(FiniteAlgebra, Sizes) {
  const FiniteAlgebra f2 = FiniteAlgebra::fq(2);
  EXPECT_EQ(FiniteAlgebra::fq(2, 3).size(), 8U);
  EXPECT_EQ(FiniteAlgebra::truncated(FiniteAlgebra::fq(3), 2).dim(), 2);
  EXPECT_EQ(FiniteAlgebra::dual_numbers(FiniteAlgebra::truncated(FiniteAlgebra::fq(3), 2)).dim(), 4);
  EXPECT_EQ(FiniteAlgebra::square_zero(f2, 2).dim(), 3);
  EXPECT_EQ(FiniteAlgebra::truncated(FiniteAlgebra::fq(2, 2), 2).residue_size(), 4U);
  EXPECT_TRUE(FiniteAlgebra::fq(7).is_field());
  EXPECT_FALSE(FiniteAlgebra::dual_numbers(f2).is_field());
  EXPECT_THROW(FiniteAlgebra::fq(6), InvalidArgument);
}

TEST(FiniteAlgebra, AxiomsByExhaustion) {
  for (const FiniteAlgebra& R : small_rings()) {
    ASSERT_TRUE(R.satisfies_axioms()) << R.name();
    const auto n = static_cast<Elem>(R.size());
    if (n > 27) continue;
    for (Elem x = 0; x < n; ++x) {
      EXPECT_EQ(R.mul(x, R.one()), x);
      EXPECT_EQ(R.add(x, R.neg(x)), R.zero());
      for (Elem y = 0; y < n; ++y) {
        EXPECT_EQ(R.mul(x, y), R.mul(y, x));
        EXPECT_EQ(R.sub(R.add(x, y), y), x);
        for (Elem z = 0; z < n; ++z) {
          EXPECT_EQ(R.mul(R.mul(x, y), z), R.mul(x, R.mul(y, z)));
          EXPECT_EQ(R.mul(x, R.add(y, z)), R.add(R.mul(x, y), R.mul(x, z)));
        }
      }
    }
  }
}

TEST(FiniteAlgebra, AxiomsRandomLarger) {
  std::mt19937 rng(79);
  for (const FiniteAlgebra& R : small_rings()) {
    std::uniform_int_distribution<std::uint64_t> pick(0, R.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = static_cast<Elem>(pick(rng));
      const auto y = static_cast<Elem>(pick(rng));
      const auto z = static_cast<Elem>(pick(rng));
      EXPECT_EQ(R.mul(R.mul(x, y), z), R.mul(x, R.mul(y, z)));
      EXPECT_EQ(R.mul(x, R.add(y, z)), R.add(R.mul(x, y), R.mul(x, z)));
      EXPECT_EQ(R.from_coords(R.coords(x)), x);
    }
  }
}

TEST(FiniteAlgebra, UnitsOfLocalRings) {
  for (const FiniteAlgebra& R : small_rings()) {
    const std::uint64_t q = R.residue_size();
    // A local ring has |R| / q elements in its maximal ideal.
    EXPECT_EQ(R.units().size(), R.size() - R.size() / q) << R.name();
    for (Elem u : R.units()) {
      EXPECT_TRUE(R.is_unit(u));
      EXPECT_EQ(R.mul(u, R.inverse(u)), R.one());
      EXPECT_NE(R.residue(u), 0U);
    }
    EXPECT_THROW(R.inverse(R.zero()), InvalidArgument);
  }
  // k_d(F_q): q^{d-1}(q - 1) units.
  for (int d = 1; d <= 3; ++d)
    EXPECT_EQ(FiniteAlgebra::truncated(FiniteAlgebra::fq(3), d).units().size(),
              static_cast<std::size_t>(std::pow(3, d - 1) * 2));
}

TEST(FiniteAlgebra, ResidueMapIsAHomomorphism) {
  for (const FiniteAlgebra& R : small_rings()) {
    const FiniteAlgebra& k = R.residue_field();
    std::mt19937 rng(83);
    std::uniform_int_distribution<std::uint64_t> pick(0, R.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = static_cast<Elem>(pick(rng));
      const auto y = static_cast<Elem>(pick(rng));
      EXPECT_EQ(R.residue(R.mul(x, y)), k.mul(R.residue(x), R.residue(y)));
      EXPECT_EQ(R.residue(R.add(x, y)), k.add(R.residue(x), R.residue(y)));
    }
  }
}

TEST(FiniteAlgebra, DiscreteLogarithms) {
  for (const auto& [p, k] : std::vector<std::pair<Residue, int>>{{2, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    const FiniteAlgebra F = FiniteAlgebra::fq(p, k);
    const std::uint64_t q = F.size();
    // phi(q - 1) primitive elements.
    std::size_t phi = 0;
    for (std::uint64_t i = 1; i < q; ++i) phi += std::gcd(i, q - 1) == 1;
    EXPECT_EQ(F.primitive_elements().size(), phi);
    for (std::size_t gen = 0; gen < F.primitive_elements().size(); ++gen) {
      Elem power = F.one();
      for (std::uint64_t e = 0; e + 1 < q; ++e) {
        EXPECT_EQ(F.discrete_log(power, gen), e);
        power = F.mul(power, F.primitive_elements()[gen]);
      }
      EXPECT_EQ(power, F.one());
    }
  }
}

TEST(AlgMatrix, DeterminantAndInverseRandom) {
  std::mt19937 rng(89);
  for (const FiniteAlgebra& R : small_rings())
    for (int trial = 0; trial < 40; ++trial) {
      const int n = std::uniform_int_distribution<int>(1, 3)(rng);
      const AlgMatrix a = random_matrix(R, n, rng);
      const AlgMatrix b = random_matrix(R, n, rng);
      EXPECT_EQ(determinant(R, mat_mul(R, a, b)), R.mul(determinant(R, a), determinant(R, b)));
      const bool inv = matrix_is_invertible(R, a);
      EXPECT_EQ(inv, operator_is_invertible(R, a));
      EXPECT_EQ(inv, R.is_unit(determinant(R, a)));
      if (inv) {
        EXPECT_EQ(mat_mul(R, a, mat_inverse(R, a)), AlgMatrix::identity(R, n));
        EXPECT_EQ(mat_mul(R, mat_inverse(R, a), a), AlgMatrix::identity(R, n));
      } else {
        EXPECT_THROW(mat_inverse(R, a), InvalidArgument);
      }
      EXPECT_EQ(mat_sub(R, mat_add(R, a, b), b), a);
    }
}

TEST(AlgMatrix, GeneralLinearGroupOrders) {
  const Quiver point(catalog::point());
  for (std::uint64_t q : {2U, 3U, 4U, 5U})
    for (int n = 1; n <= (q < 4 ? 3 : 2); ++n) {
      const FiniteAlgebra F = q == 4 ? FiniteAlgebra::fq(2, 2) : FiniteAlgebra::fq(static_cast<Residue>(q));
      EXPECT_EQ(group_order(point, F, {n}), gl_order_over_field(q, n)) << "q=" << q << " n=" << n;
    }
  // GL_n(R) is the preimage of GL_n(k) under reduction: scale by |m|^{n^2}.
  const FiniteAlgebra R = FiniteAlgebra::truncated(FiniteAlgebra::fq(2), 2);
  for (int n = 1; n <= 3; ++n) {
    const BigInt ideal = ipow(BigInt(2), static_cast<unsigned>(n * n));
    EXPECT_EQ(group_order(point, R, {n}), gl_order_over_field(2, n) * ideal);
  }
  // Brute count of invertible 2x2 matrices over F_2[t]/(t^2).
  std::size_t invertible = 0;
  AlgMatrix m(2, 2);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b)
      for (Elem c = 0; c < 4; ++c)
        for (Elem d = 0; d < 4; ++d) {
          m.a = {a, b, c, d};
          invertible += matrix_is_invertible(R, m);
        }
  EXPECT_EQ(BigInt(static_cast<unsigned long>(invertible)), group_order(point, R, {2}));
}

TEST(FiniteAlgebra, FrobeniusForms) {
  const FiniteAlgebra f2 = FiniteAlgebra::fq(2);
  EXPECT_TRUE(find_frobenius_form(f2).has_value());
  EXPECT_TRUE(find_frobenius_form(FiniteAlgebra::fq(3, 2)).has_value());
  EXPECT_TRUE(find_frobenius_form(FiniteAlgebra::truncated(f2, 3)).has_value());
  EXPECT_TRUE(find_frobenius_form(FiniteAlgebra::dual_numbers(f2)).has_value());
  EXPECT_FALSE(find_frobenius_form(FiniteAlgebra::square_zero(f2, 2)).has_value());
  EXPECT_FALSE(find_frobenius_form(FiniteAlgebra::square_zero(f2, 3)).has_value());
  // The form returned really is nondegenerate: no nonzero x with l(xy) = 0 for all y.
  const FiniteAlgebra R = FiniteAlgebra::truncated(FiniteAlgebra::fq(3), 2);
  const auto form = find_frobenius_form(R);
  ASSERT_TRUE(form.has_value());
  auto l = [&](Elem x) {
    const auto c = R.coords(x);
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += std::uint64_t{c[i]} * (*form)[i];
    return s % R.characteristic();
  };
  for (Elem x = 1; x < R.size(); ++x) {
    bool pairs = false;
    for (Elem y = 0; y < R.size(); ++y) pairs = pairs || l(R.mul(x, y)) != 0;
    EXPECT_TRUE(pairs) << R.format(x);
  }
}
