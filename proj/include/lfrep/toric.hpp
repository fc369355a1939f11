#pragma once

#include "lfrep/limits.hpp"
#include "lfrep/multigraph.hpp"
#include "lfrep/poly.hpp"

namespace lfrep {

/// delta(G, r) = sum_{k=1}^{d-1} [b1(G) - b1(G_k)], where G_k contracts the
/// edges with r(e) > k. Validates r against gamma.
int delta(const Multigraph& gamma, const DepthFunction& r);

/// Exponent of the stabilizer beyond q^{d-1}(q-1), obtained from the
/// per-level linear systems u_s = u_t (edges with r(e) > k) and checked
/// against the contraction formula #E_{<=k} - b1(G_k). Requires connected gamma.
int delta_tilde(const Multigraph& gamma, const DepthFunction& r);

/// R_d(G, q) = sum_r q^{delta(G, r)}; R_0 is 1 on edgeless graphs and 0
/// otherwise. Multiplicative over components, so disconnected input is fine.
LaurentPoly r_d_polynomial(const Multigraph& gamma, int d, const Limits& limits = {});

/// A_d(Q, q) = sum over connected spanning G of (q-1)^{b1(G)} R_d(G, q);
/// A_0 is 1 when every edge is a loop and 0 otherwise. Requires connected Q.
LaurentPoly a_d_polynomial(const Multigraph& quiver, int d, const Limits& limits = {});

/// Closed form of A_d(C_n, q).
LaurentPoly a_d_cyclic_closed_form(int n, int d);

/// Per-type data, either as polynomials in q or evaluated at a prime power.
template <typename T>
struct ToricOrbitData {
  T stabilizer_order;
  T rep_count;
  T orbit_count;
};

ToricOrbitData<LaurentPoly> toric_type_orbit_data(const Multigraph& gamma, const DepthFunction& r);
ToricOrbitData<BigInt> toric_type_orbit_data(const Multigraph& gamma, const DepthFunction& r, const BigInt& q);

/// True when q = p^k for a prime p and k >= 1.
bool is_prime_power(const BigInt& q);

}  // namespace lfrep
