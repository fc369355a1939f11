#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "lfrep/limits.hpp"
#include "lfrep/poly.hpp"

namespace lfrep {

using EdgeId = int;
using Vertex = int;  // 1-based

struct Edge {
  EdgeId id;
  Vertex u;
  Vertex v;
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A set of edge ids, kept sorted and duplicate free.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  EdgeSubset(std::initializer_list<EdgeId> ids);
  explicit EdgeSubset(std::vector<EdgeId> ids);

  const std::vector<EdgeId>& members() const { return ids_; }
  bool contains(EdgeId id) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  friend EdgeSubset operator|(const EdgeSubset& a, const EdgeSubset& b);
  friend EdgeSubset operator-(const EdgeSubset& a, const EdgeSubset& b);
  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;
  friend bool operator<(const EdgeSubset& a, const EdgeSubset& b) { return a.ids_ < b.ids_; }

 private:
  std::vector<EdgeId> ids_;
};

/// Undirected multigraph on vertices 1..n. Loops and parallel edges are
/// allowed; edge ids are unique and survive subgraph and contraction.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);
  Multigraph(int vertex_count, std::vector<Edge> edges);

  /// Adds an edge with the next free id and returns that id.
  EdgeId add_edge(Vertex u, Vertex v);
  void add_edge(EdgeId id, Vertex u, Vertex v);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<EdgeId> edge_ids() const;
  EdgeSubset all_edges() const { return EdgeSubset(edge_ids()); }
  bool has_edge(EdgeId id) const;
  const Edge& edge(EdgeId id) const;
  /// Position of an edge in edges(); throws InvalidArgument for unknown ids.
  std::size_t index_of(EdgeId id) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;
  friend bool operator<(const Multigraph& a, const Multigraph& b);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// A multigraph with an orientation: edge (id, u, v) is the arrow u -> v.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(Multigraph g) : g_(std::move(g)) {}

  int vertex_count() const { return g_.vertex_count(); }
  std::size_t arrow_count() const { return g_.edge_count(); }
  const std::vector<Edge>& arrows() const { return g_.edges(); }
  Vertex source(EdgeId id) const { return g_.edge(id).u; }
  Vertex target(EdgeId id) const { return g_.edge(id).v; }
  /// Underlying graph with the orientation forgotten.
  const Multigraph& graph() const { return g_; }
  /// Reverses the arrows listed in `flip`.
  Quiver reoriented(const EdgeSubset& flip) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  Multigraph g_;
};

/// r : E -> [1, d].
struct DepthFunction {
  int d = 1;
  std::map<EdgeId, int> values;

  int operator()(EdgeId e) const;
  /// Throws InvalidArgument unless total on g's edges with values in [1, d].
  void validate(const Multigraph& g) const;
};

/// Strict chain F_1 < ... < F_l = E (F_0 = {} implicit).
struct StrictFiltration {
  std::vector<EdgeSubset> chain;

  std::size_t length() const { return chain.size(); }
  /// Throws InvalidArgument unless strictly increasing and ending at `edges`.
  void validate(const EdgeSubset& edges) const;
};

int component_count(const Multigraph& g);
bool is_connected(const Multigraph& g);
/// First Betti number #E - #V + #components.
int b1(const Multigraph& g);

/// Identifies the endpoints of every edge in `a` and removes those edges.
/// Vertices are renumbered by their smallest original member; surviving edges
/// keep their ids. Contracting a loop deletes it.
Multigraph contract(const Multigraph& g, const EdgeSubset& a);
/// Keeps every vertex and only the edges in `a`.
Multigraph spanning_subgraph(const Multigraph& g, const EdgeSubset& a);
Multigraph delete_edges(const Multigraph& g, const EdgeSubset& a);

/// Visits every A with spanning_subgraph(g, A) connected, in lexicographic
/// order of sorted id lists. A disconnected g yields nothing.
void for_each_connected_spanning_subgraph(const Multigraph& g, const std::function<void(const EdgeSubset&)>& fn,
                                          const Limits& limits = {});
std::vector<EdgeSubset> connected_spanning_subgraphs(const Multigraph& g, const Limits& limits = {});

/// Visits every ordered set partition of `edges`, i.e. every strict
/// filtration. The empty set has exactly one (empty) filtration.
void for_each_strict_filtration(const EdgeSubset& edges, const std::function<void(const StrictFiltration&)>& fn,
                                const Limits& limits = {});
std::vector<StrictFiltration> strict_filtrations(const EdgeSubset& edges, const Limits& limits = {});
/// Number of ordered set partitions of an m-set (Fubini numbers).
BigInt ordered_bell(unsigned m);

/// Kirchhoff count over the reduced Laplacian (loops ignored, parallel edges
/// with multiplicity). Zero for disconnected graphs.
BigInt spanning_tree_count(const Multigraph& g);

/// Tutte polynomial T(g; x, y) as a BiPoly in (x, y), by deletion and
/// contraction processing edges in `order` (default: ascending ids).
BiPoly tutte(const Multigraph& g);
BiPoly tutte(const Multigraph& g, const std::vector<EdgeId>& order);

namespace detail {
/// b1 of g with the edges whose position bit is set in `contracted` contracted
/// and the edges not in `kept` deleted (positions index g.edges()).
int b1_of_minor(const Multigraph& g, std::uint64_t kept, std::uint64_t contracted);
int components_of_mask(const Multigraph& g, std::uint64_t mask);
}  // namespace detail

}  // namespace lfrep
