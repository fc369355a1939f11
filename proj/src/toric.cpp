#include "lfrep/toric.hpp"

#include <bit>

#include "lfrep/errors.hpp"
#include "lfrep/linalg.hpp"

namespace lfrep {

namespace {

constexpr std::size_t kMaskEdges = 63;

void check_maskable(const Multigraph& g) {
  if (g.edge_count() > kMaskEdges) throw InvalidArgument("too many edges for bitmask evaluation");
}

std::uint64_t full_mask(const Multigraph& g) {
  return g.edge_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.edge_count()) - 1;
}

// Bit i set when the i-th edge has depth > k.
std::uint64_t deeper_than(const std::vector<int>& depth, int k) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < depth.size(); ++i)
    if (depth[i] > k) mask |= std::uint64_t{1} << i;
  return mask;
}

std::vector<int> depths_in_edge_order(const Multigraph& g, const DepthFunction& r) {
  r.validate(g);
  std::vector<int> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.push_back(r(e.id));
  return out;
}

int delta_of(const Multigraph& g, const std::vector<int>& depth, int d, int betti) {
  const std::uint64_t all = full_mask(g);
  int total = 0;
  for (int k = 1; k < d; ++k) total += betti - detail::b1_of_minor(g, all, deeper_than(depth, k));
  return total;
}

void check_term_budget(std::size_t edges, int d, const Limits& limits) {
  if (limits.unlimited) return;
  BigInt terms = ipow(d, static_cast<unsigned>(edges));
  if (terms > BigInt(static_cast<unsigned long>(limits.max_depth_functions)))
    throw GuardExceeded("d^|E| = " + terms.get_str() + " depth functions exceed the limit");
}

LaurentPoly q_minus_one_pow(int e) { return (LaurentPoly::var() - 1).pow(static_cast<unsigned>(e)); }

}  // namespace

int delta(const Multigraph& gamma, const DepthFunction& r) {
  check_maskable(gamma);
  return delta_of(gamma, depths_in_edge_order(gamma, r), r.d, b1(gamma));
}

int delta_tilde(const Multigraph& gamma, const DepthFunction& r) {
  check_maskable(gamma);
  if (!is_connected(gamma)) throw InvalidArgument("stabilizer data needs a connected graph");
  const auto depth = depths_in_edge_order(gamma, r);
  const std::uint64_t all = full_mask(gamma);
  const auto& es = gamma.edges();
  int total = 0;
  for (int k = 1; k < r.d; ++k) {
    // Level-k coefficients must agree across every edge with r(e) > k.
    ModMatrix sys(es.size(), static_cast<std::size_t>(gamma.vertex_count()), 2);
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (depth[i] <= k || es[i].is_loop()) continue;
      sys.add(i, es[i].u - 1, 1);
      sys.add(i, es[i].v - 1, -1);
    }
    const int solutions = static_cast<int>(nullity(sys));
    const std::uint64_t deep = deeper_than(depth, k);
    const int shallow = std::popcount(all & ~deep);
    const int via_contraction = shallow - detail::b1_of_minor(gamma, all, deep);
    if (solutions - 1 != via_contraction)
      throw InternalError("stabilizer level " + std::to_string(k) + " disagrees with the contraction count");
    total += solutions - 1;
  }
  return total;
}

LaurentPoly r_d_polynomial(const Multigraph& gamma, int d, const Limits& limits) {
  if (d < 0) throw InvalidArgument("negative depth");
  if (d == 0) return gamma.edge_count() == 0 ? 1 : 0;
  check_maskable(gamma);
  const std::size_t m = gamma.edge_count();
  check_term_budget(m, d, limits);
  const int betti = b1(gamma);
  std::map<int, BigInt> counts;
  std::vector<int> depth(m, 1);
  while (true) {
    ++counts[delta_of(gamma, depth, d, betti)];
    std::size_t i = 0;
    while (i < m && depth[i] == d) depth[i++] = 1;
    if (i == m) break;
    ++depth[i];
  }
  LaurentPoly out;
  for (const auto& [e, c] : counts) out += LaurentPoly::monomial(c, e);
  return out;
}

LaurentPoly a_d_polynomial(const Multigraph& quiver, int d, const Limits& limits) {
  if (d < 0) throw InvalidArgument("negative depth");
  if (!is_connected(quiver)) throw InvalidArgument("A_d requires a connected graph");
  if (d == 0) {
    for (const Edge& e : quiver.edges())
      if (!e.is_loop()) return 0;
    return 1;
  }
  LaurentPoly total;
  for_each_connected_spanning_subgraph(
      quiver,
      [&](const EdgeSubset& a) {
        const Multigraph gamma = spanning_subgraph(quiver, a);
        total += q_minus_one_pow(b1(gamma)) * r_d_polynomial(gamma, d, limits);
      },
      limits);
  return total;
}

LaurentPoly a_d_cyclic_closed_form(int n, int d) {
  if (n < 1 || d < 1) throw InvalidArgument("cyclic closed form needs n >= 1 and d >= 1");
  const auto un = static_cast<unsigned>(n);
  LaurentPoly out = LaurentPoly::var(d);
  for (int k = 1; k < d; ++k) {
    const BigInt c = ipow(d - k + 1, un) - 2 * ipow(d - k, un) + ipow(d - k - 1, un);
    out += LaurentPoly::monomial(c, k);
  }
  out += LaurentPoly(-ipow(d, un) + ipow(d - 1, un) + n * ipow(d, un - 1));
  return out;
}

ToricOrbitData<LaurentPoly> toric_type_orbit_data(const Multigraph& gamma, const DepthFunction& r) {
  const int dt = delta_tilde(gamma, r);
  const LaurentPoly q = LaurentPoly::var();
  int depth_excess = 0;
  for (const auto& [id, v] : r.values) depth_excess += v - 1;
  ToricOrbitData<LaurentPoly> out;
  out.stabilizer_order = LaurentPoly::var(dt + r.d - 1) * (q - 1);
  out.rep_count = q_minus_one_pow(static_cast<int>(gamma.edge_count())) * LaurentPoly::var(depth_excess);
  const LaurentPoly group = (LaurentPoly::var(r.d - 1) * (q - 1)).pow(static_cast<unsigned>(gamma.vertex_count()));
  out.orbit_count = divide_exact(out.rep_count * out.stabilizer_order, group);
  const LaurentPoly expected = q_minus_one_pow(b1(gamma)) * LaurentPoly::var(delta(gamma, r));
  if (!(out.orbit_count == expected))
    throw InternalError("orbit count " + out.orbit_count.to_string() + " differs from (q-1)^b1 q^delta");
  return out;
}

ToricOrbitData<BigInt> toric_type_orbit_data(const Multigraph& gamma, const DepthFunction& r, const BigInt& q) {
  if (!is_prime_power(q)) throw InvalidArgument("q = " + q.get_str() + " is not a prime power");
  const auto sym = toric_type_orbit_data(gamma, r);
  return {sym.stabilizer_order.evaluate(q), sym.rep_count.evaluate(q), sym.orbit_count.evaluate(q)};
}

bool is_prime_power(const BigInt& q) {
  if (q < 2) return false;
  BigInt n = q;
  BigInt p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) return true;  // n itself is prime
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace lfrep
