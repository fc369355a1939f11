#pragma once

#include <functional>
#include <vector>

#include "lfrep/algebra.hpp"
#include "lfrep/limits.hpp"
#include "lfrep/multigraph.hpp"
#include "lfrep/poly.hpp"

namespace lfrep {

/// alpha(i) for vertices 1..n, stored at index i-1.
using RankVector = std::vector<int>;

/// One matrix per arrow, in arrow order; arrow a: i -> j carries an
/// alpha(j) x alpha(i) matrix. Points of the double quiver list the arrows
/// of Q first and then their reverses a*.
struct RepPoint {
  std::vector<AlgMatrix> maps;
};

/// One invertible alpha(i) x alpha(i) matrix per vertex.
struct GroupElement {
  std::vector<AlgMatrix> factors;
};

/// How the Burnside sum over G is evaluated. All three must agree.
enum class BurnsideEngine {
  tables,   // per-arrow nullity tables, one pass over every group element
  naive,    // one stacked linear system per group element
  classes,  // as `tables`, but one pass per tuple of conjugacy classes
};

struct CountOptions {
  Limits limits;
  BurnsideEngine engine = BurnsideEngine::tables;
  /// Which primitive element of the residue field serves as the base of
  /// the discrete logarithm in the character 1^chi.
  std::size_t generator = 0;
};

/// Double quiver: the arrows of Q followed by their reverses, ids m+1..2m.
Quiver double_quiver(const Quiver& q);

BigInt group_order(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const Limits& limits = {});
/// Visits every element of G_alpha(R) once, in a fixed order.
void for_each_group_element(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha,
                            const std::function<void(const GroupElement&)>& fn, const Limits& limits = {});
/// g . x with (g . x)_a = g_{t(a)} x_a g_{s(a)}^{-1}.
RepPoint act(const Quiver& q, const FiniteAlgebra& R, const GroupElement& g, const RepPoint& x);
/// #{x in Rep : g . x = x}, as p^nullity of the linear fixed-point system.
BigInt fix_count(const GroupElement& g, const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha);

/// Number of G-orbits on Rep^alpha(Q, R).
BigInt m_count(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const CountOptions& opts = {});
/// Absolutely indecomposable count via the character 1^chi of order |alpha|.
/// Requires |alpha| to divide q - 1 for the residue field F_q.
BigInt a_count(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const CountOptions& opts = {});

/// Moment map of a point of the double quiver, one square matrix per vertex.
std::vector<AlgMatrix> moment_map(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const RepPoint& x);

/// Orbits on the zero fiber of the moment map, by Burnside over fixed subspaces.
BigInt m_preproj(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const CountOptions& opts = {});
/// Same count by partitioning the zero fiber into orbits directly.
BigInt m_preproj_partition(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha,
                           const Limits& limits = {});
BigInt a_preproj(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const CountOptions& opts = {});

struct FourierSides {
  BigInt direct;   // |mu^{-1}(0)| by enumeration
  BigInt fourier;  // (1/|g|) sum_x |V| |ker rho(x)|
};
/// Both sides of the Fourier count of the zero fiber. Requires Frobenius R.
FourierSides fourier_sides(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const Limits& limits = {});
/// The common value; throws InternalError if the sides differ.
BigInt fourier_fiber_count(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha,
                           const Limits& limits = {});

/// Orbits of rank-one representations (every vertex rank 1), by direct
/// partition; with connected_only, only orbits whose support is a connected
/// spanning subgraph are counted.
BigInt toric_ai_orbit_count(const Quiver& q, const FiniteAlgebra& R, bool connected_only = true,
                            const Limits& limits = {});

/// #{g : g . x = x}, by filtering the group.
BigInt stabilizer_order(const RepPoint& x, const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha,
                        const Limits& limits = {});

struct CounterexampleCounts {
  BigInt a;  // orbits of R[e] under its units (rank (1,1) on A_2 over R[e])
  BigInt b;  // preprojective orbit count of A_2, rank (1,1), over R
};
/// R = F_q[t_1..t_n]/(t)^2. Both values are checked against their closed
/// forms and against the second engine before returning.
CounterexampleCounts counterexample_counts(int n, int q, const Limits& limits = {});
LaurentPoly counterexample_a_closed_form(int n);
LaurentPoly counterexample_b_closed_form(int n);

}  // namespace lfrep
