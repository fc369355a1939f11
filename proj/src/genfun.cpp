#include "lfrep/genfun.hpp"

#include "lfrep/catalog.hpp"
#include "lfrep/errors.hpp"
#include "lfrep/toric.hpp"

namespace lfrep {

namespace {

void check_edges(const Multigraph& g, const Limits& limits) {
  if (!limits.allows_edges(g.edge_count()) || g.edge_count() > 63)
    throw GuardExceeded("generating function over " + std::to_string(g.edge_count()) + " edges exceeds the limit");
}

std::uint64_t full_mask(std::size_t m) { return m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1; }

EdgeSubset subset_of_mask(const Multigraph& g, std::uint64_t mask) {
  std::vector<EdgeId> ids;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if ((mask >> i) & 1U) ids.push_back(g.edges()[i].id);
  return EdgeSubset(std::move(ids));
}

RatFunQT epsilon_of(const Multigraph& g) { return g.edge_count() == 0 ? 1 : 0; }

bool all_loops(const Multigraph& g) {
  for (const Edge& e : g.edges())
    if (!e.is_loop()) return false;
  return true;
}

BiPoly q_minus_one_pow(int e) {
  BiPoly out(1);
  for (int i = 0; i < e; ++i) out = out * (BiPoly::monomial(1, 1, 0) - 1);
  return out;
}

}  // namespace

RatFunQT r_of_cvector(const CVector& c) {
  if (c.empty() || c[0] != 0) throw InvalidArgument("c-vector must start with c_0 = 0");
  const int l = static_cast<int>(c.size()) - 1;
  int shift = 0;
  RatFunQT::Factors den;
  for (int i = 0; i <= l; ++i) {
    if (c[i] < 0) throw InvalidArgument("c-vector entries must be non-negative");
    ++den[c[i]];
    if (i >= 2) shift += c[i];
  }
  return RatFunQT(BiPoly::monomial(1, shift, l), std::move(den));
}

CVector cvector_of_filtration(const Multigraph& gamma, const StrictFiltration& f) {
  f.validate(gamma.all_edges());
  const int betti = b1(gamma);
  CVector c{0};
  EdgeSubset prev;
  for (const EdgeSubset& step : f.chain) {
    c.push_back(betti - b1(contract(gamma, gamma.all_edges() - prev)));
    prev = step;
  }
  return c;
}

RatFunQT r_genfun(const Multigraph& gamma, const Limits& limits) {
  check_edges(gamma, limits);
  const std::size_t m = gamma.edge_count();
  const std::uint64_t all = full_mask(m);
  const int betti = b1(gamma);
  // Filtrations are grouped by c-vector before any rational arithmetic.
  std::map<CVector, BigInt> tally;
  CVector c{0};
  std::function<void(std::uint64_t)> visit = [&](std::uint64_t before) {
    if (before == all) {
      ++tally[c];
      return;
    }
    c.push_back(betti - detail::b1_of_minor(gamma, all, all & ~before));
    const std::uint64_t rest = all & ~before;
    for (std::uint64_t s = rest & (~rest + 1); s != 0; s = (s - rest) & rest) visit(before | s);
    c.pop_back();
  };
  visit(0);
  RatFunQT out;
  for (const auto& [cv, n] : tally) out += RatFunQT(BiPoly(n)) * r_of_cvector(cv);
  return out;
}

RatFunQT r_genfun_recursive(const Multigraph& gamma, const Limits& limits) {
  check_edges(gamma, limits);
  // (1 - T) R(G) = eps(G) + T sum_{A != {}} R(G/A, q, q^{b1(G[A])} T)
  RatFunQT sum = epsilon_of(gamma);
  const std::size_t m = gamma.edge_count();
  for (std::uint64_t mask = 1; mask <= full_mask(m) && m > 0; ++mask) {
    const EdgeSubset a = subset_of_mask(gamma, mask);
    const int shift = b1(spanning_subgraph(gamma, a));
    sum += RatFunQT(BiPoly::monomial(1, 0, 1)) * r_genfun_recursive(contract(gamma, a), limits).scale_t(shift);
  }
  return sum * RatFunQT::geometric(0);
}

RatFunQT a_genfun(const Multigraph& quiver, const Limits& limits) {
  if (!is_connected(quiver)) throw InvalidArgument("A(Q, q, T) requires a connected graph");
  RatFunQT total;
  for_each_connected_spanning_subgraph(
      quiver,
      [&](const EdgeSubset& a) {
        const Multigraph gamma = spanning_subgraph(quiver, a);
        total += RatFunQT(q_minus_one_pow(b1(gamma))) * r_genfun(gamma, limits);
      },
      limits);
  return total;
}

BiPoly q_pochhammer(int k) {
  BiPoly out(1);
  for (int i = 0; i < k; ++i) out = out * (BiPoly(1) - BiPoly::monomial(1, i, 1));
  return out;
}

BiPoly q_eulerian(int m, const Limits& limits) {
  if (m < 0) throw InvalidArgument("negative loop count");
  if (m == 0) return BiPoly(1);
  const RatFunQT scaled = r_genfun(catalog::bouquet(m), limits) * RatFunQT(q_pochhammer(m + 1));
  if (!scaled.factors().empty()) throw InternalError("(T)_{m+1} does not clear the denominator of R(S_m)");
  const BiPoly& p = scaled.numerator();
  if (p.is_zero() || p.min_second() < 1) throw InternalError("R(S_m) (T)_{m+1} is not divisible by T");
  return p.shifted(0, -1);
}

bool check_recursion(const Multigraph& gamma, const Limits& limits) {
  check_edges(gamma, limits);
  const RatFunQT lhs = r_genfun(gamma, limits);
  RatFunQT sum;
  const std::size_t m = gamma.edge_count();
  for (std::uint64_t mask = 0; mask <= full_mask(m); ++mask) {
    const EdgeSubset a = subset_of_mask(gamma, mask);
    sum += r_genfun(contract(gamma, a), limits).scale_t(b1(spanning_subgraph(gamma, a)));
    if (mask == full_mask(m)) break;
  }
  return lhs == epsilon_of(gamma) + RatFunQT(BiPoly::monomial(1, 0, 1)) * sum;
}

bool check_duality(const Multigraph& g, DualityForm which, const Limits& limits) {
  if (!is_connected(g)) throw InvalidArgument("duality needs a connected graph");
  if (which == DualityForm::a) {
    const RatFunQT a = a_genfun(g, limits);
    const int sign = g.vertex_count() % 2 == 0 ? 1 : -1;
    return a.inverted() == RatFunQT(all_loops(g) ? 1 : 0) + RatFunQT(sign) * a;
  }
  const RatFunQT r = r_genfun(g, limits);
  const int sign = (static_cast<int>(g.edge_count()) - 1) % 2 == 0 ? 1 : -1;
  return r.inverted() == epsilon_of(g) + RatFunQT(BiPoly::monomial(sign, b1(g), 0)) * r;
}

// ---------------------------------------------------------------------------
// Characters

GraphChar::GraphChar(std::string name, Fn fn)
    : name_(std::move(name)), fn_(std::move(fn)), memo_(std::make_shared<Memo>()) {}

LaurentPoly GraphChar::operator()(const Multigraph& g) const {
  {
    std::lock_guard guard(memo_->lock);
    auto it = memo_->values.find(g);
    if (it != memo_->values.end()) return it->second;
  }
  LaurentPoly v = fn_(g);
  std::lock_guard guard(memo_->lock);
  memo_->values.emplace(g, v);
  return v;
}

namespace chars {

GraphChar epsilon() {
  return GraphChar("eps", [](const Multigraph& g) { return LaurentPoly(g.edge_count() == 0 ? 1 : 0); });
}

GraphChar epsilon1() {
  return GraphChar("eps1", [](const Multigraph& g) { return LaurentPoly(all_loops(g) ? 1 : 0); });
}

GraphChar psi(int k) {
  return GraphChar("psi(q^" + std::to_string(k) + ")", [k](const Multigraph& g) { return LaurentPoly::var(k * b1(g)); });
}

GraphChar signed_psi(int k) {
  return GraphChar("(-1)^E psi(q^" + std::to_string(k) + ")", [k](const Multigraph& g) {
    return LaurentPoly::monomial(g.edge_count() % 2 == 0 ? 1 : -1, k * b1(g));
  });
}

GraphChar r_d(int d) {
  return GraphChar("R_" + std::to_string(d), [d](const Multigraph& g) { return r_d_polynomial(g, d); });
}

}  // namespace chars

GraphChar convolve(const GraphChar& f, const GraphChar& g, const Limits& limits) {
  return GraphChar("(" + f.name() + " * " + g.name() + ")", [f, g, limits](const Multigraph& gamma) {
    check_edges(gamma, limits);
    LaurentPoly total;
    const std::uint64_t all = full_mask(gamma.edge_count());
    for (std::uint64_t mask = 0;; ++mask) {
      const EdgeSubset a = subset_of_mask(gamma, mask);
      total += f(spanning_subgraph(gamma, a)) * g(contract(gamma, a));
      if (mask == all) break;
    }
    return total;
  });
}

}  // namespace lfrep
