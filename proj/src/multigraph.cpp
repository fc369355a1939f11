#include "lfrep/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <tuple>

#include "lfrep/errors.hpp"

namespace lfrep {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void check_subset(const Multigraph& g, const EdgeSubset& a) {
  for (EdgeId id : a.members())
    if (!g.has_edge(id)) throw InvalidArgument("unknown edge id " + std::to_string(id));
}

void check_enumerable(std::size_t m, const Limits& limits) {
  if (!limits.allows_edges(m))
    throw GuardExceeded("enumeration over " + std::to_string(m) + " edges exceeds the limit of " +
                        std::to_string(limits.max_edges));
}

}  // namespace

// ---------------------------------------------------------------------------
// EdgeSubset

EdgeSubset::EdgeSubset(std::initializer_list<EdgeId> ids) : EdgeSubset(std::vector<EdgeId>(ids)) {}

EdgeSubset::EdgeSubset(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EdgeSubset::contains(EdgeId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

EdgeSubset operator|(const EdgeSubset& a, const EdgeSubset& b) {
  std::vector<EdgeId> out;
  std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(), std::back_inserter(out));
  return EdgeSubset(std::move(out));
}

EdgeSubset operator-(const EdgeSubset& a, const EdgeSubset& b) {
  std::vector<EdgeId> out;
  std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(), std::back_inserter(out));
  return EdgeSubset(std::move(out));
}

// ---------------------------------------------------------------------------
// Multigraph

Multigraph::Multigraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw InvalidArgument("negative vertex count");
}

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges) : Multigraph(vertex_count) {
  for (const Edge& e : edges) add_edge(e.id, e.u, e.v);
}

EdgeId Multigraph::add_edge(Vertex u, Vertex v) {
  EdgeId id = 1;
  for (const Edge& e : edges_) id = std::max(id, e.id + 1);
  add_edge(id, u, v);
  return id;
}

void Multigraph::add_edge(EdgeId id, Vertex u, Vertex v) {
  if (u < 1 || u > n_ || v < 1 || v > n_)
    throw InvalidArgument("edge " + std::to_string(id) + " references a vertex outside 1.." + std::to_string(n_));
  if (has_edge(id)) throw InvalidArgument("duplicate edge id " + std::to_string(id));
  edges_.push_back({id, u, v});
}

std::vector<EdgeId> Multigraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const Edge& e : edges_) ids.push_back(e.id);
  return ids;
}

bool Multigraph::has_edge(EdgeId id) const {
  return std::any_of(edges_.begin(), edges_.end(), [id](const Edge& e) { return e.id == id; });
}

const Edge& Multigraph::edge(EdgeId id) const { return edges_[index_of(id)]; }

std::size_t Multigraph::index_of(EdgeId id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return i;
  throw InvalidArgument("unknown edge id " + std::to_string(id));
}

bool operator<(const Multigraph& a, const Multigraph& b) {
  auto key = [](const Edge& e) { return std::make_tuple(e.id, e.u, e.v); };
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return std::lexicographical_compare(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(),
                                      [&](const Edge& x, const Edge& y) { return key(x) < key(y); });
}

Quiver Quiver::reoriented(const EdgeSubset& flip) const {
  check_subset(g_, flip);
  Multigraph h(g_.vertex_count());
  for (const Edge& e : g_.edges()) {
    if (flip.contains(e.id))
      h.add_edge(e.id, e.v, e.u);
    else
      h.add_edge(e.id, e.u, e.v);
  }
  return Quiver(std::move(h));
}

int DepthFunction::operator()(EdgeId e) const {
  auto it = values.find(e);
  if (it == values.end()) throw InvalidArgument("depth function undefined on edge " + std::to_string(e));
  return it->second;
}

void DepthFunction::validate(const Multigraph& g) const {
  if (d < 1) throw InvalidArgument("depth must be at least 1");
  if (values.size() != g.edge_count()) throw InvalidArgument("depth function is not total on the edge set");
  for (const auto& [id, r] : values) {
    if (!g.has_edge(id)) throw InvalidArgument("depth function names unknown edge " + std::to_string(id));
    if (r < 1 || r > d)
      throw InvalidArgument("depth value " + std::to_string(r) + " outside [1, " + std::to_string(d) + "]");
  }
}

void StrictFiltration::validate(const EdgeSubset& edges) const {
  if (chain.empty()) {
    if (!edges.empty()) throw InvalidArgument("empty filtration of a non-empty edge set");
    return;
  }
  EdgeSubset prev;
  for (const EdgeSubset& f : chain) {
    if (f.size() <= prev.size() || !(f - prev).size() || (prev - f).size())
      throw InvalidArgument("filtration is not strictly increasing");
    if ((f - edges).size()) throw InvalidArgument("filtration names edges outside the host");
    prev = f;
  }
  if (!(prev == edges)) throw InvalidArgument("filtration does not end at the full edge set");
}

// ---------------------------------------------------------------------------
// Structure

namespace detail {

int components_of_mask(const Multigraph& g, std::uint64_t mask) {
  UnionFind uf(g.vertex_count() + 1);
  int comps = g.vertex_count();
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    if ((mask >> i) & 1U)
      if (uf.unite(es[i].u, es[i].v)) --comps;
  return comps;
}

int b1_of_minor(const Multigraph& g, std::uint64_t kept, std::uint64_t contracted) {
  const int remaining = std::popcount(kept & ~contracted);
  const int minor_vertices = components_of_mask(g, contracted);
  const int minor_components = components_of_mask(g, kept);
  return remaining - minor_vertices + minor_components;
}

}  // namespace detail

int component_count(const Multigraph& g) {
  UnionFind uf(g.vertex_count() + 1);
  int comps = g.vertex_count();
  for (const Edge& e : g.edges())
    if (uf.unite(e.u, e.v)) --comps;
  return comps;
}

bool is_connected(const Multigraph& g) { return component_count(g) == 1; }

int b1(const Multigraph& g) {
  return static_cast<int>(g.edge_count()) - g.vertex_count() + component_count(g);
}

Multigraph contract(const Multigraph& g, const EdgeSubset& a) {
  check_subset(g, a);
  UnionFind uf(g.vertex_count() + 1);
  for (const Edge& e : g.edges())
    if (a.contains(e.id)) uf.unite(e.u, e.v);
  // Roots are class minima, so ascending roots give the renumbering.
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  int next = 0;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (uf.find(v) == v) label[v] = ++next;
  Multigraph h(next);
  for (const Edge& e : g.edges())
    if (!a.contains(e.id)) h.add_edge(e.id, label[uf.find(e.u)], label[uf.find(e.v)]);
  return h;
}

Multigraph spanning_subgraph(const Multigraph& g, const EdgeSubset& a) {
  check_subset(g, a);
  Multigraph h(g.vertex_count());
  for (const Edge& e : g.edges())
    if (a.contains(e.id)) h.add_edge(e.id, e.u, e.v);
  return h;
}

Multigraph delete_edges(const Multigraph& g, const EdgeSubset& a) {
  check_subset(g, a);
  return spanning_subgraph(g, g.all_edges() - a);
}

// ---------------------------------------------------------------------------
// Enumerations

void for_each_connected_spanning_subgraph(const Multigraph& g, const std::function<void(const EdgeSubset&)>& fn,
                                          const Limits& limits) {
  const std::size_t m = g.edge_count();
  check_enumerable(m, limits);
  if (!is_connected(g)) return;
  // Positions sorted by id so that the DFS preorder is lexicographic in ids.
  std::vector<std::size_t> by_id(m);
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(), [&](auto x, auto y) { return g.edges()[x].id < g.edges()[y].id; });

  std::vector<EdgeId> prefix;
  std::function<void(std::size_t, std::uint64_t)> visit = [&](std::size_t start, std::uint64_t mask) {
    if (detail::components_of_mask(g, mask) == 1) fn(EdgeSubset(prefix));
    for (std::size_t i = start; i < m; ++i) {
      prefix.push_back(g.edges()[by_id[i]].id);
      visit(i + 1, mask | (std::uint64_t{1} << by_id[i]));
      prefix.pop_back();
    }
  };
  visit(0, 0);
}

std::vector<EdgeSubset> connected_spanning_subgraphs(const Multigraph& g, const Limits& limits) {
  std::vector<EdgeSubset> out;
  for_each_connected_spanning_subgraph(g, [&](const EdgeSubset& a) { out.push_back(a); }, limits);
  return out;
}

void for_each_strict_filtration(const EdgeSubset& edges, const std::function<void(const StrictFiltration&)>& fn,
                                const Limits& limits) {
  const auto& ids = edges.members();
  const std::size_t m = ids.size();
  check_enumerable(m, limits);
  StrictFiltration f;
  std::function<void(std::uint64_t)> visit = [&](std::uint64_t remaining) {
    if (remaining == 0) {
      fn(f);
      return;
    }
    const EdgeSubset before = f.chain.empty() ? EdgeSubset() : f.chain.back();
    // Non-empty submasks of `remaining`, ascending.
    for (std::uint64_t s = remaining & (~remaining + 1);; s = (s - remaining) & remaining) {
      if (s == 0) break;
      std::vector<EdgeId> block;
      for (std::size_t i = 0; i < m; ++i)
        if ((s >> i) & 1U) block.push_back(ids[i]);
      f.chain.push_back(before | EdgeSubset(std::move(block)));
      visit(remaining & ~s);
      f.chain.pop_back();
    }
  };
  visit(m == 0 ? 0 : (m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1));
}

std::vector<StrictFiltration> strict_filtrations(const EdgeSubset& edges, const Limits& limits) {
  std::vector<StrictFiltration> out;
  for_each_strict_filtration(edges, [&](const StrictFiltration& f) { out.push_back(f); }, limits);
  return out;
}

BigInt ordered_bell(unsigned m) {
  // a(n) = sum_{k=1}^{n} C(n,k) a(n-k), a(0) = 1.
  std::vector<BigInt> a(m + 1);
  a[0] = 1;
  for (unsigned n = 1; n <= m; ++n) {
    a[n] = 0;
    for (unsigned k = 1; k <= n; ++k) a[n] += binomial(n, k) * a[n - k];
  }
  return a[m];
}

// ---------------------------------------------------------------------------
// Spanning trees and Tutte

BigInt spanning_tree_count(const Multigraph& g) {
  if (!is_connected(g)) return 0;
  const int n = g.vertex_count();
  if (n <= 1) return 1;
  std::vector<std::vector<BigInt>> lap(n, std::vector<BigInt>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    const int a = e.u - 1;
    const int b = e.v - 1;
    lap[a][a] += 1;
    lap[b][b] += 1;
    lap[a][b] -= 1;
    lap[b][a] -= 1;
  }
  // Bareiss elimination on the minor that drops vertex 1.
  const int k = n - 1;
  std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = lap[i + 1][j + 1];
  BigInt prev = 1;
  int sign = 1;
  for (int c = 0; c < k; ++c) {
    int pivot = c;
    while (pivot < k && m[pivot][c] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      sign = -sign;
    }
    for (int i = c + 1; i < k; ++i) {
      for (int j = c + 1; j < k; ++j) m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[c][c];
  }
  return sign * m[k - 1][k - 1];
}

namespace {

BiPoly tutte_rec(const Multigraph& g, const std::vector<EdgeId>& order) {
  if (g.edge_count() == 0) return BiPoly(1);
  EdgeId pick = 0;
  bool found = false;
  for (EdgeId id : order)
    if (g.has_edge(id)) {
      pick = id;
      found = true;
      break;
    }
  if (!found) throw InvalidArgument("edge order does not cover the graph");
  const Edge& e = g.edge(pick);
  const EdgeSubset just{pick};
  if (e.is_loop()) return BiPoly::monomial(1, 0, 1) * tutte_rec(delete_edges(g, just), order);
  Multigraph deleted = delete_edges(g, just);
  if (component_count(deleted) > component_count(g))
    return BiPoly::monomial(1, 1, 0) * tutte_rec(contract(g, just), order);
  return tutte_rec(deleted, order) + tutte_rec(contract(g, just), order);
}

}  // namespace

BiPoly tutte(const Multigraph& g) {
  std::vector<EdgeId> ids = g.edge_ids();
  std::sort(ids.begin(), ids.end());
  return tutte(g, ids);
}

BiPoly tutte(const Multigraph& g, const std::vector<EdgeId>& order) {
  if (!is_connected(g)) throw InvalidArgument("Tutte polynomial requested for a disconnected graph");
  return tutte_rec(g, order);
}

}  // namespace lfrep
