#include "lfrep/repenum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "lfrep/cyclotomic.hpp"
#include "lfrep/errors.hpp"
#include "lfrep/toric.hpp"

namespace lfrep {

namespace {

using Elem = FiniteAlgebra::Elem;

void validate_rank(const Quiver& q, const RankVector& alpha) {
  if (static_cast<int>(alpha.size()) != q.vertex_count())
    throw InvalidArgument("rank vector has " + std::to_string(alpha.size()) + " entries for " +
                          std::to_string(q.vertex_count()) + " vertices");
  bool positive = false;
  for (int a : alpha) {
    if (a < 0) throw InvalidArgument("negative rank");
    positive = positive || a > 0;
  }
  if (!positive) throw InvalidArgument("rank vector is zero");
}

int rank_sum(const RankVector& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

BigInt big(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

// Saturating power, for guard checks only.
std::uint64_t sat_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (b != 0 && r > (~std::uint64_t{0}) / b) return ~std::uint64_t{0};
    r *= b;
  }
  return r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > (~std::uint64_t{0}) / a) return ~std::uint64_t{0};
  return a * b;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

/// GL_n(R) with determinant residues and conjugacy classes.
struct VertexGroup {
  int n = 0;
  std::vector<AlgMatrix> elems;
  std::vector<Elem> det_residue;
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> class_rep;
  std::vector<std::uint64_t> class_size;
};

/// Per-call state: GL tables by size and multiplication matrices.
class Context {
 public:
  Context(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const Limits& limits)
      : q_(q), R_(R), alpha_(alpha), limits_(limits) {
    validate_rank(q, alpha);
    if (R.size() <= 4096) {
      mm_.reserve(R.size());
      for (Elem x = 0; x < R.size(); ++x) mm_.push_back(R.multiplication_matrix(x));
    }
  }

  const Quiver& quiver() const { return q_; }
  const FiniteAlgebra& ring() const { return R_; }
  const RankVector& alpha() const { return alpha_; }
  const Limits& limits() const { return limits_; }
  int rank_at(Vertex v) const { return alpha_[v - 1]; }

  ModMatrix mult(Elem x) const { return mm_.empty() ? R_.multiplication_matrix(x) : mm_[x]; }

  std::uint64_t group_order_u64() const {
    std::uint64_t total = 1;
    for (int a : alpha_) total = sat_mul(total, gl(a).elems.size());
    return total;
  }

  /// With `by_class`, the walk visits class tuples rather than elements,
  /// but |G| must still fit the 64-bit weights.
  void check_group_guard(bool by_class = false) const {
    const std::uint64_t order = group_order_u64();
    if (order == ~std::uint64_t{0}) throw GuardExceeded("group order overflows 64 bits");
    std::uint64_t walked = order;
    if (by_class) {
      walked = 1;
      for (int a : alpha_) walked = sat_mul(walked, gl(a).class_rep.size());
    }
    if (!limits_.allows_group(walked))
      throw GuardExceeded("Burnside walk over " + std::to_string(walked) + (by_class ? " class tuples" : " elements") +
                          " exceeds the limit");
  }

  const VertexGroup& gl(int n) const {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(n, build_gl(n)).first->second;
  }

  /// F_p system of g_t X - X g_s = 0 for an rt x rs matrix X over R.
  ModMatrix arrow_system(const AlgMatrix& gt, const AlgMatrix& gs) const {
    const int rt = gt.rows;
    const int rs = gs.rows;
    const int d = R_.dim();
    const auto u = static_cast<std::size_t>(rt * rs * d);
    ModMatrix sys(u, u, R_.characteristic());
    auto put = [&](int row_cell, int col_cell, Elem coef, int sign) {
      if (coef == 0) return;
      const ModMatrix m = mult(coef);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          if (m.at(r, c)) sys.add(row_cell * d + r, col_cell * d + c, sign * static_cast<std::int64_t>(m.at(r, c)));
    };
    for (int i = 0; i < rt; ++i)
      for (int j = 0; j < rs; ++j) {
        const int cell = i * rs + j;
        for (int k = 0; k < rt; ++k) put(cell, k * rs + j, gt.at(i, k), 1);
        for (int k = 0; k < rs; ++k) put(cell, i * rs + k, gs.at(k, j), -1);
      }
    return sys;
  }

  int arrow_nullity(const AlgMatrix& gt, const AlgMatrix& gs) const {
    if (gt.rows == 0 || gs.rows == 0) return 0;
    return static_cast<int>(nullity(arrow_system(gt, gs)));
  }

  std::uint64_t residue_log(Elem residue_code, std::size_t generator, unsigned modulus) const {
    if (modulus == 1) return 0;
    return R_.residue_field().discrete_log(residue_code, generator) % modulus;
  }

 private:
  VertexGroup build_gl(int n) const {
    VertexGroup g;
    g.n = n;
    const Elem one = R_.one();
    if (n == 0) {
      g.elems.emplace_back(0, 0);
      g.det_residue.push_back(R_.residue(one));
    } else {
      const std::uint64_t space = sat_pow(R_.size(), static_cast<std::uint64_t>(n) * n);
      if (!limits_.allows_table(space))
        throw GuardExceeded("listing GL_" + std::to_string(n) + " scans " + std::to_string(space) +
                            " matrices, beyond the limit");
      AlgMatrix m(n, n);
      for (std::uint64_t code = 0; code < space; ++code) {
        std::uint64_t c = code;
        for (auto& e : m.a) {
          e = static_cast<Elem>(c % R_.size());
          c /= R_.size();
        }
        const Elem det = determinant(R_, m);
        if (R_.is_unit(det)) {
          g.elems.push_back(m);
          g.det_residue.push_back(R_.residue(det));
        }
      }
    }
    build_classes(g);
    return g;
  }

  std::uint64_t code_of(const AlgMatrix& m) const {
    std::uint64_t c = 0;
    for (auto it = m.a.rbegin(); it != m.a.rend(); ++it) c = c * R_.size() + *it;
    return c;
  }

  // Conjugacy classes by closure under conjugation with elementary and
  // diagonal matrices. Missing generators would only split classes, which
  // is harmless for every class function computed here.
  void build_classes(VertexGroup& g) const {
    const int n = g.n;
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    index.reserve(g.elems.size() * 2);
    for (std::uint32_t i = 0; i < g.elems.size(); ++i) index.emplace(code_of(g.elems[i]), i);
    std::vector<std::pair<AlgMatrix, AlgMatrix>> gens;
    std::vector<Elem> basis;
    for (int k = 0; k < R_.dim(); ++k) {
      std::vector<Residue> c(static_cast<std::size_t>(R_.dim()), 0);
      c[k] = 1;
      basis.push_back(R_.from_coords(c));
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          for (Elem u : R_.units()) {
            AlgMatrix s = AlgMatrix::identity(R_, n);
            s.at(i, i) = u;
            AlgMatrix si = AlgMatrix::identity(R_, n);
            si.at(i, i) = R_.inverse(u);
            gens.emplace_back(s, si);
          }
        } else {
          for (Elem b : basis) {
            AlgMatrix s = AlgMatrix::identity(R_, n);
            s.at(i, j) = b;
            AlgMatrix si = AlgMatrix::identity(R_, n);
            si.at(i, j) = R_.neg(b);
            gens.emplace_back(s, si);
          }
        }
      }
    constexpr std::uint32_t unset = ~std::uint32_t{0};
    g.class_of.assign(g.elems.size(), unset);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t start = 0; start < g.elems.size(); ++start) {
      if (g.class_of[start] != unset) continue;
      const auto cid = static_cast<std::uint32_t>(g.class_rep.size());
      g.class_rep.push_back(start);
      g.class_of[start] = cid;
      queue.assign(1, start);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const AlgMatrix& x = g.elems[queue[head]];
        for (const auto& [s, si] : gens) {
          const AlgMatrix y = mat_mul(R_, mat_mul(R_, s, x), si);
          const auto it = index.find(code_of(y));
          if (it == index.end()) throw InternalError("conjugate left GL_n");
          if (g.class_of[it->second] == unset) {
            g.class_of[it->second] = cid;
            queue.push_back(it->second);
          }
        }
      }
      g.class_size.push_back(queue.size());
    }
  }

  const Quiver& q_;
  const FiniteAlgebra& R_;
  RankVector alpha_;
  Limits limits_;
  std::vector<ModMatrix> mm_;
  mutable std::map<int, VertexGroup> cache_;
};

// Vertex indices 0..n-1; arrows assigned to their later endpoint.
std::vector<std::vector<std::size_t>> arrows_closing_at(const Quiver& q) {
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(q.vertex_count()));
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Edge& e = q.arrows()[a];
    out[std::max(e.u, e.v) - 1].push_back(a);
  }
  return out;
}

/// Histogram of (character exponent, fixed-space dimension) over G.
struct Histogram {
  unsigned modulus = 1;
  int max_k = 0;
  std::vector<std::uint64_t> counts;  // modulus x (max_k + 1)

  void add(unsigned e, int k, std::uint64_t w) { counts[e * (max_k + 1) + k] += w; }

  CyclotomicInt total(Residue p) const {
    CyclotomicInt out(modulus);
    for (unsigned e = 0; e < modulus; ++e)
      for (int k = 0; k <= max_k; ++k) {
        const std::uint64_t c = counts[e * (max_k + 1) + k];
        if (c) out.add_power(e, big(c) * ipow(p, static_cast<unsigned>(k)));
      }
    return out;
  }
};

struct Item {
  std::uint32_t cls;
  unsigned e;
  std::uint64_t weight;
};

std::vector<Item> vertex_items(const Context& ctx, const VertexGroup& g, bool by_class, std::size_t generator,
                               unsigned modulus) {
  std::vector<Item> items;
  if (by_class) {
    for (std::uint32_t c = 0; c < g.class_rep.size(); ++c)
      items.push_back({c, static_cast<unsigned>(ctx.residue_log(g.det_residue[g.class_rep[c]], generator, modulus)),
                       g.class_size[c]});
  } else {
    for (std::size_t i = 0; i < g.elems.size(); ++i)
      items.push_back({g.class_of[i], static_cast<unsigned>(ctx.residue_log(g.det_residue[i], generator, modulus)), 1});
  }
  return items;
}

Histogram burnside_tables(const Context& ctx, unsigned modulus, std::size_t generator, bool by_class) {
  const Quiver& q = ctx.quiver();
  const int n = q.vertex_count();
  std::vector<const VertexGroup*> groups;
  for (Vertex v = 1; v <= n; ++v) groups.push_back(&ctx.gl(ctx.rank_at(v)));

  // Nullity per arrow, indexed by the class ids of its endpoints.
  struct ArrowTable {
    int s;
    int t;
    std::size_t stride;
    std::vector<int> nullity;
  };
  std::vector<ArrowTable> tables;
  int max_k = 0;
  for (const Edge& e : q.arrows()) {
    const VertexGroup& gs = *groups[e.u - 1];
    const VertexGroup& gt = *groups[e.v - 1];
    ArrowTable tab{e.u - 1, e.v - 1, gt.class_rep.size(), {}};
    if (e.is_loop()) {
      for (auto rep : gs.class_rep) tab.nullity.push_back(ctx.arrow_nullity(gs.elems[rep], gs.elems[rep]));
    } else {
      for (auto rs : gs.class_rep)
        for (auto rt : gt.class_rep) tab.nullity.push_back(ctx.arrow_nullity(gt.elems[rt], gs.elems[rs]));
    }
    max_k += *std::max_element(tab.nullity.begin(), tab.nullity.end());
    tables.push_back(std::move(tab));
  }

  Histogram hist{modulus, max_k, std::vector<std::uint64_t>(modulus * (max_k + 1), 0)};
  std::vector<std::vector<Item>> items;
  for (int v = 0; v < n; ++v) items.push_back(vertex_items(ctx, *groups[v], by_class, generator, modulus));
  const auto closing = arrows_closing_at(q);
  std::vector<std::uint32_t> cls(static_cast<std::size_t>(n));

  auto closing_nullity = [&](int v) {
    int k = 0;
    for (auto a : closing[v]) {
      const ArrowTable& t = tables[a];
      k += t.s == t.t ? t.nullity[cls[t.s]] : t.nullity[cls[t.s] * t.stride + cls[t.t]];
    }
    return k;
  };
  std::function<void(int, unsigned, int, std::uint64_t)> visit = [&](int v, unsigned e, int k, std::uint64_t w) {
    for (const Item& it : items[v]) {
      cls[v] = it.cls;
      const unsigned e2 = (e + it.e) % modulus;
      const int k2 = k + closing_nullity(v);
      const std::uint64_t w2 = w * it.weight;
      if (v + 1 == n)
        hist.add(e2, k2, w2);
      else
        visit(v + 1, e2, k2, w2);
    }
  };
  visit(0, 0, 0, 1);
  return hist;
}

Histogram burnside_naive(const Context& ctx, unsigned modulus, std::size_t generator) {
  const Quiver& q = ctx.quiver();
  const FiniteAlgebra& R = ctx.ring();
  int max_k = 0;
  for (const Edge& e : q.arrows()) max_k += ctx.rank_at(e.u) * ctx.rank_at(e.v) * R.dim();
  Histogram hist{modulus, max_k, std::vector<std::uint64_t>(modulus * (max_k + 1), 0)};
  for_each_group_element(
      q, R, ctx.alpha(),
      [&](const GroupElement& g) {
        // One block-diagonal system for all arrows at once.
        std::vector<ModMatrix> blocks;
        std::size_t total = 0;
        for (const Edge& e : q.arrows()) {
          if (ctx.rank_at(e.u) == 0 || ctx.rank_at(e.v) == 0) continue;
          blocks.push_back(ctx.arrow_system(g.factors[e.v - 1], g.factors[e.u - 1]));
          total += blocks.back().cols();
        }
        ModMatrix sys(total, total, R.characteristic());
        std::size_t off = 0;
        for (const auto& b : blocks) {
          for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) sys.at(off + i, off + j) = b.at(i, j);
          off += b.cols();
        }
        unsigned e = 0;
        for (const auto& f : g.factors) e = static_cast<unsigned>((e + ctx.residue_log(R.residue(determinant(R, f)), generator, modulus)) % modulus);
        hist.add(e, static_cast<int>(nullity(sys)), 1);
      },
      ctx.limits());
  return hist;
}

unsigned character_order(const Context& ctx) {
  const auto m = static_cast<unsigned>(rank_sum(ctx.alpha()));
  const std::uint64_t q = ctx.ring().residue_size();
  if ((q - 1) % m != 0)
    throw InvalidArgument("|alpha| = " + std::to_string(m) + " does not divide q - 1 = " + std::to_string(q - 1));
  return m;
}

BigInt finish(const CyclotomicInt& sum, const BigInt& order, const char* what) {
  const BigInt total = sum.rational_value();
  if (total % order != 0) throw InternalError(std::string(what) + ": Burnside sum is not divisible by |G|");
  BigInt out = total / order;
  if (out < 0) throw InternalError(std::string(what) + ": negative count");
  return out;
}

Histogram burnside(const Context& ctx, unsigned modulus, const CountOptions& opts) {
  ctx.check_group_guard(opts.engine == BurnsideEngine::classes);
  switch (opts.engine) {
    case BurnsideEngine::naive: return burnside_naive(ctx, modulus, opts.generator);
    case BurnsideEngine::classes: return burnside_tables(ctx, modulus, opts.generator, true);
    case BurnsideEngine::tables: break;
  }
  return burnside_tables(ctx, modulus, opts.generator, false);
}

// ---------------------------------------------------------------------------
// Double quiver points

struct Layout {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<std::size_t> offset;  // F_p coordinate offset per arrow
  std::size_t total = 0;
};

Layout layout_of(const Quiver& dq, const RankVector& alpha, int dim) {
  Layout l;
  for (const Edge& e : dq.arrows()) {
    l.rows.push_back(alpha[e.v - 1]);
    l.cols.push_back(alpha[e.u - 1]);
    l.offset.push_back(l.total);
    l.total += static_cast<std::size_t>(l.rows.back() * l.cols.back() * dim);
  }
  return l;
}

RepPoint decode(const FiniteAlgebra& R, const Layout& l, const std::vector<Residue>& v) {
  RepPoint x;
  const int d = R.dim();
  std::vector<Residue> c(static_cast<std::size_t>(d));
  for (std::size_t a = 0; a < l.rows.size(); ++a) {
    AlgMatrix m(l.rows[a], l.cols[a]);
    for (std::size_t cell = 0; cell < m.a.size(); ++cell) {
      for (int k = 0; k < d; ++k) c[k] = v[l.offset[a] + cell * d + k];
      m.a[cell] = R.from_coords(c);
    }
    x.maps.push_back(std::move(m));
  }
  return x;
}

bool moment_vanishes(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const RepPoint& x) {
  for (const AlgMatrix& m : moment_map(q, R, alpha, x))
    for (Elem e : m.a)
      if (e != 0) return false;
  return true;
}

/// Points of Fix(g) on the double quiver lying in the zero fiber.
BigInt preproj_fixed_zero_count(const Context& ctx, const Quiver& dq, const Layout& l, const GroupElement& g) {
  const FiniteAlgebra& R = ctx.ring();
  const Residue p = R.characteristic();
  std::vector<std::vector<Residue>> basis;
  for (std::size_t a = 0; a < dq.arrows().size(); ++a) {
    const Edge& e = dq.arrows()[a];
    if (l.rows[a] == 0 || l.cols[a] == 0) continue;
    for (auto& b : nullspace_basis(ctx.arrow_system(g.factors[e.v - 1], g.factors[e.u - 1]))) {
      std::vector<Residue> full(l.total, 0);
      std::copy(b.begin(), b.end(), full.begin() + static_cast<std::ptrdiff_t>(l.offset[a]));
      basis.push_back(std::move(full));
    }
  }
  if (!ctx.limits().allows_points(sat_pow(p, basis.size())))
    throw GuardExceeded("fixed subspace of dimension " + std::to_string(basis.size()) +
                        " is too large to enumerate; try the direct partition");
  // Odometer over coefficients; each digit step adds its basis vector once,
  // and p steps of a digit cancel, so `v` tracks the combination exactly.
  std::vector<Residue> v(l.total, 0);
  std::vector<Residue> digits(basis.size(), 0);
  BigInt count = 0;
  while (true) {
    if (moment_vanishes(ctx.quiver(), R, ctx.alpha(), decode(R, l, v))) ++count;
    std::size_t i = 0;
    for (; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < l.total; ++j) v[j] = (v[j] + basis[i][j]) % p;
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
    if (i == basis.size()) break;
  }
  return count;
}

CyclotomicInt preproj_sum(const Context& ctx, unsigned modulus, const CountOptions& opts) {
  ctx.check_group_guard(opts.engine == BurnsideEngine::classes);
  const Quiver dq = double_quiver(ctx.quiver());
  const FiniteAlgebra& R = ctx.ring();
  const Layout l = layout_of(dq, ctx.alpha(), R.dim());
  const int n = ctx.quiver().vertex_count();
  CyclotomicInt sum(modulus);
  std::map<std::vector<std::uint32_t>, BigInt> memo;

  std::vector<const VertexGroup*> groups;
  for (Vertex v = 1; v <= n; ++v) groups.push_back(&ctx.gl(ctx.rank_at(v)));
  const bool by_class = opts.engine == BurnsideEngine::classes;
  std::vector<std::vector<std::uint32_t>> choices(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const VertexGroup& g = *groups[v];
    if (by_class)
      choices[v] = g.class_rep;
    else {
      choices[v].resize(g.elems.size());
      std::iota(choices[v].begin(), choices[v].end(), 0U);
    }
  }
  std::vector<std::uint32_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    GroupElement g;
    std::vector<std::uint32_t> key;
    std::uint64_t weight = 1;
    unsigned e = 0;
    for (int v = 0; v < n; ++v) {
      const VertexGroup& vg = *groups[v];
      const std::uint32_t idx = choices[v][pick[v]];
      g.factors.push_back(vg.elems[idx]);
      key.push_back(vg.class_of[idx]);
      if (by_class) weight *= vg.class_size[vg.class_of[idx]];
      e = static_cast<unsigned>((e + ctx.residue_log(vg.det_residue[idx], opts.generator, modulus)) % modulus);
    }
    BigInt c;
    if (opts.engine == BurnsideEngine::naive) {
      c = preproj_fixed_zero_count(ctx, dq, l, g);
    } else {
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, preproj_fixed_zero_count(ctx, dq, l, g)).first;
      c = it->second;
    }
    sum.add_power(e, c * big(weight));
    int v = n - 1;
    while (v >= 0 && ++pick[v] == choices[v].size()) pick[v--] = 0;
    if (v < 0) break;
  }
  return sum;
}

// All points of the double quiver's representation space, as element tuples.
template <typename Fn>
void for_each_point(const FiniteAlgebra& R, std::size_t entries, const Limits& limits, Fn fn) {
  const std::uint64_t total = sat_pow(R.size(), entries);
  if (!limits.allows_points(total))
    throw GuardExceeded("point set of size " + std::to_string(total) + " exceeds the limit");
  std::vector<Elem> x(entries, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& e : x) {
      e = static_cast<Elem>(c % R.size());
      c /= R.size();
    }
    fn(code, x);
  }
}

RepPoint point_from_entries(const Layout& l, const std::vector<Elem>& x) {
  RepPoint out;
  std::size_t pos = 0;
  for (std::size_t a = 0; a < l.rows.size(); ++a) {
    AlgMatrix m(l.rows[a], l.cols[a]);
    for (auto& e : m.a) e = x[pos++];
    out.maps.push_back(std::move(m));
  }
  return out;
}

std::uint64_t code_of_point(const FiniteAlgebra& R, const RepPoint& x) {
  std::uint64_t c = 0;
  std::uint64_t place = 1;
  for (const auto& m : x.maps)
    for (Elem e : m.a) {
      c += e * place;
      place *= R.size();
    }
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API

Quiver double_quiver(const Quiver& q) {
  Multigraph g(q.vertex_count());
  for (const Edge& e : q.arrows()) g.add_edge(e.u, e.v);
  const auto m = static_cast<EdgeId>(q.arrow_count());
  int k = 0;
  for (const Edge& e : q.arrows()) g.add_edge(m + ++k, e.v, e.u);
  return Quiver(std::move(g));
}

BigInt group_order(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const Limits& limits) {
  const Context ctx(q, R, alpha, limits);
  BigInt total = 1;
  for (int a : alpha) total *= big(ctx.gl(a).elems.size());
  return total;
}

void for_each_group_element(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha,
                            const std::function<void(const GroupElement&)>& fn, const Limits& limits) {
  const Context ctx(q, R, alpha, limits);
  ctx.check_group_guard();
  const int n = q.vertex_count();
  std::vector<const VertexGroup*> groups;
  for (int a : alpha) groups.push_back(&ctx.gl(a));
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  GroupElement g;
  g.factors.resize(static_cast<std::size_t>(n));
  while (true) {
    for (int v = 0; v < n; ++v) g.factors[v] = groups[v]->elems[pick[v]];
    fn(g);
    int v = n - 1;
    while (v >= 0 && ++pick[v] == groups[v]->elems.size()) pick[v--] = 0;
    if (v < 0) break;
  }
}

RepPoint act(const Quiver& q, const FiniteAlgebra& R, const GroupElement& g, const RepPoint& x) {
  if (x.maps.size() != q.arrow_count()) throw InvalidArgument("point does not match the quiver");
  RepPoint out;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Edge& e = q.arrows()[a];
    out.maps.push_back(mat_mul(R, mat_mul(R, g.factors[e.v - 1], x.maps[a]), mat_inverse(R, g.factors[e.u - 1])));
  }
  return out;
}

BigInt fix_count(const GroupElement& g, const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha) {
  const Context ctx(q, R, alpha, {});
  if (g.factors.size() != alpha.size()) throw InvalidArgument("group element does not match the rank vector");
  int k = 0;
  for (const Edge& e : q.arrows()) k += ctx.arrow_nullity(g.factors[e.v - 1], g.factors[e.u - 1]);
  return ipow(R.characteristic(), static_cast<unsigned>(k));
}

BigInt m_count(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const CountOptions& opts) {
  const Context ctx(q, R, alpha, opts.limits);
  const Histogram h = burnside(ctx, 1, opts);
  return finish(h.total(R.characteristic()), big(ctx.group_order_u64()), "m_count");
}

BigInt a_count(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const CountOptions& opts) {
  const Context ctx(q, R, alpha, opts.limits);
  const unsigned m = character_order(ctx);
  const Histogram h = burnside(ctx, m, opts);
  return finish(h.total(R.characteristic()), big(ctx.group_order_u64()), "a_count");
}

std::vector<AlgMatrix> moment_map(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const RepPoint& x) {
  validate_rank(q, alpha);
  const std::size_t m = q.arrow_count();
  if (x.maps.size() != 2 * m) throw InvalidArgument("moment map needs a point of the double quiver");
  std::vector<AlgMatrix> mu;
  for (int a : alpha) mu.emplace_back(a, a);
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = q.arrows()[i];
    const AlgMatrix& xa = x.maps[i];
    const AlgMatrix& xs = x.maps[m + i];
    if (xa.rows != alpha[e.v - 1] || xa.cols != alpha[e.u - 1] || xs.rows != alpha[e.u - 1] ||
        xs.cols != alpha[e.v - 1])
      throw InvalidArgument("matrix shape does not match the rank vector");
    mu[e.v - 1] = mat_add(R, mu[e.v - 1], mat_mul(R, xa, xs));
    mu[e.u - 1] = mat_sub(R, mu[e.u - 1], mat_mul(R, xs, xa));
  }
  return mu;
}

BigInt m_preproj(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const CountOptions& opts) {
  const Context ctx(q, R, alpha, opts.limits);
  return finish(preproj_sum(ctx, 1, opts), big(ctx.group_order_u64()), "m_preproj");
}

BigInt a_preproj(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const CountOptions& opts) {
  const Context ctx(q, R, alpha, opts.limits);
  const unsigned m = character_order(ctx);
  return finish(preproj_sum(ctx, m, opts), big(ctx.group_order_u64()), "a_preproj");
}

BigInt m_preproj_partition(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const Limits& limits) {
  const Context ctx(q, R, alpha, limits);
  const Quiver dq = double_quiver(q);
  const Layout l = layout_of(dq, alpha, 1);
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<RepPoint> zeros;
  for_each_point(R, l.total, limits, [&](std::uint64_t code, const std::vector<Elem>& x) {
    RepPoint pt = point_from_entries(l, x);
    if (!moment_vanishes(q, R, alpha, pt)) return;
    index.emplace(code, static_cast<std::uint32_t>(zeros.size()));
    zeros.push_back(std::move(pt));
  });
  UnionFind uf(zeros.size());
  const int n = q.vertex_count();
  for (int v = 0; v < n; ++v) {
    for (const AlgMatrix& h : ctx.gl(alpha[v]).elems) {
      GroupElement g;
      for (int w = 0; w < n; ++w) g.factors.push_back(w == v ? h : AlgMatrix::identity(R, alpha[w]));
      for (std::uint32_t i = 0; i < zeros.size(); ++i) {
        const auto it = index.find(code_of_point(R, act(dq, R, g, zeros[i])));
        if (it == index.end()) throw InternalError("group action left the zero fiber");
        uf.unite(i, it->second);
      }
    }
  }
  BigInt orbits = 0;
  for (std::uint32_t i = 0; i < zeros.size(); ++i)
    if (uf.find(i) == i) ++orbits;
  return orbits;
}

FourierSides fourier_sides(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const Limits& limits) {
  const Context ctx(q, R, alpha, limits);
  if (!find_frobenius_form(R, limits))
    throw InvalidArgument(R.name() + " is not Frobenius; the Fourier count does not apply");
  FourierSides out;
  // Direct side.
  const Quiver dq = double_quiver(q);
  const Layout l = layout_of(dq, alpha, 1);
  out.direct = 0;
  for_each_point(R, l.total, limits, [&](std::uint64_t, const std::vector<Elem>& x) {
    if (moment_vanishes(q, R, alpha, point_from_entries(l, x))) ++out.direct;
  });
  // Fourier side: x runs over the Lie algebra, one square matrix per vertex.
  std::size_t lie_entries = 0;
  for (int a : alpha) lie_entries += static_cast<std::size_t>(a * a);
  std::size_t rep_entries = 0;
  for (const Edge& e : q.arrows()) rep_entries += static_cast<std::size_t>(alpha[e.u - 1] * alpha[e.v - 1]);
  BigInt sum = 0;
  for_each_point(R, lie_entries, limits, [&](std::uint64_t, const std::vector<Elem>& x) {
    std::vector<AlgMatrix> xs;
    std::size_t pos = 0;
    for (int a : alpha) {
      AlgMatrix m(a, a);
      for (auto& e : m.a) e = x[pos++];
      xs.push_back(std::move(m));
    }
    int k = 0;
    for (const Edge& e : q.arrows()) k += ctx.arrow_nullity(xs[e.v - 1], xs[e.u - 1]);
    sum += ipow(R.characteristic(), static_cast<unsigned>(k));
  });
  const BigInt lie_size = ipow(big(R.size()), static_cast<unsigned>(lie_entries));
  const BigInt numerator = ipow(big(R.size()), static_cast<unsigned>(rep_entries)) * sum;
  if (numerator % lie_size != 0) throw InternalError("Fourier side is not an integer");
  out.fourier = numerator / lie_size;
  return out;
}

BigInt fourier_fiber_count(const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha, const Limits& limits) {
  const FourierSides s = fourier_sides(q, R, alpha, limits);
  if (s.direct != s.fourier)
    throw InternalError("zero fiber has " + s.direct.get_str() + " points but the Fourier sum gives " +
                        s.fourier.get_str());
  return s.direct;
}

BigInt toric_ai_orbit_count(const Quiver& q, const FiniteAlgebra& R, bool connected_only, const Limits& limits) {
  const std::size_t m = q.arrow_count();
  if (m > 63) throw InvalidArgument("too many arrows");
  const std::uint64_t total = sat_pow(R.size(), m);
  if (!limits.allows_points(total)) throw GuardExceeded("toric point set of size " + std::to_string(total) + " exceeds the limit");
  UnionFind uf(total);
  const auto units = R.units();
  std::vector<Elem> x(m);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& e : x) {
      e = static_cast<Elem>(c % R.size());
      c /= R.size();
    }
    for (Vertex v = 1; v <= q.vertex_count(); ++v)
      for (Elem u : units) {
        const Elem ui = R.inverse(u);
        std::uint64_t image = 0;
        std::uint64_t place = 1;
        for (std::size_t a = 0; a < m; ++a) {
          const Edge& e = q.arrows()[a];
          Elem y = x[a];
          if (e.v == v) y = R.mul(u, y);
          if (e.u == v) y = R.mul(y, ui);
          image += y * place;
          place *= R.size();
        }
        uf.unite(static_cast<std::uint32_t>(code), static_cast<std::uint32_t>(image));
      }
  }
  BigInt orbits = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (uf.find(static_cast<std::uint32_t>(code)) != code) continue;
    if (connected_only) {
      std::uint64_t support = 0;
      std::uint64_t c = code;
      for (std::size_t a = 0; a < m; ++a) {
        if (c % R.size() != 0) support |= std::uint64_t{1} << a;
        c /= R.size();
      }
      if (detail::components_of_mask(q.graph(), support) != 1) continue;
    }
    ++orbits;
  }
  return orbits;
}

BigInt stabilizer_order(const RepPoint& x, const Quiver& q, const FiniteAlgebra& R, const RankVector& alpha,
                        const Limits& limits) {
  BigInt count = 0;
  for_each_group_element(q, R, alpha, [&](const GroupElement& g) {
    if (act(q, R, g, x).maps == x.maps) ++count;
  }, limits);
  return count;
}

LaurentPoly counterexample_a_closed_form(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  LaurentPoly out = LaurentPoly(2) + LaurentPoly::var(n);
  for (int i = 0; i < n; ++i) out += LaurentPoly::var(i + n - 1) + LaurentPoly::var(i);
  return out;
}

LaurentPoly counterexample_b_closed_form(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  LaurentPoly s;
  for (int i = 0; i < n; ++i) s += LaurentPoly::var(i);
  return LaurentPoly(3) + (LaurentPoly::var() - 1) * s * s + LaurentPoly(2) * s;
}

CounterexampleCounts counterexample_counts(int n, int q, const Limits& limits) {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (!is_prime_power(q)) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  Residue p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  for (int r = q; r > 1; r /= static_cast<int>(p)) ++k;
  const FiniteAlgebra R = FiniteAlgebra::square_zero(FiniteAlgebra::fq(p, k), n);
  const FiniteAlgebra Re = FiniteAlgebra::dual_numbers(R);
  const Quiver a2(Multigraph(2, {{1, 1, 2}}));

  CounterexampleCounts out;
  out.a = m_count(a2, Re, {1, 1}, {limits});
  // Orbits of R[e] under multiplication by units, directly.
  std::vector<bool> seen(Re.size(), false);
  BigInt direct = 0;
  const auto units = Re.units();
  for (Elem x = 0; x < Re.size(); ++x) {
    if (seen[x]) continue;
    ++direct;
    for (Elem u : units) seen[Re.mul(u, x)] = true;
  }
  if (direct != out.a) throw InternalError("Burnside and direct orbit counts of R[e] differ");

  out.b = m_preproj(a2, R, {1, 1}, {limits});
  if (limits.allows_points(sat_pow(R.size(), 2)) && m_preproj_partition(a2, R, {1, 1}, limits) != out.b)
    throw InternalError("preprojective Burnside and partition counts differ");

  const BigInt qq = q;
  if (out.a != counterexample_a_closed_form(n).evaluate(qq) || out.b != counterexample_b_closed_form(n).evaluate(qq))
    throw InternalError("counterexample counts differ from their closed forms");
  if (out.b - out.a != (ipow(qq, n) - 1) * (ipow(qq, n - 1) - 1))
    throw InternalError("B - A differs from (q^n - 1)(q^{n-1} - 1)");
  return out;
}

}  // namespace lfrep
