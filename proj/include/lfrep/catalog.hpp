#pragma once

#include <random>
#include <string>
#include <vector>

#include "lfrep/multigraph.hpp"

namespace lfrep::catalog {

/// One vertex, no edges.
Multigraph point();
/// C_n: vertices 1..n, edge i -> i+1 mod n. C_1 is a loop, C_2 a double edge.
Multigraph cycle(int n);
/// A_n: the path 1 -> 2 -> ... -> n.
Multigraph path(int n);
/// S_m: one vertex with m loops.
Multigraph bouquet(int m);
/// Two vertices joined by k parallel edges 1 -> 2.
Multigraph dipole(int k);

/// Resolves `C<n>`, `A<n>`, `Sm:<m>`, `D<k>` (dipole) and `point`.
/// Throws InvalidArgument for unknown names.
Multigraph builtin(const std::string& name);

/// A representative of every isomorphism class of connected multigraphs
/// (loops and parallel edges allowed) with at most `max_edges` edges,
/// including the single point. Edge ids are 1..m and each edge is oriented
/// from its smaller endpoint.
std::vector<Multigraph> connected_multigraphs(int max_edges);

/// Canonical edge list under vertex relabeling; equal keys mean isomorphic.
std::vector<std::pair<int, int>> canonical_key(const Multigraph& g);

/// All 2^m orientations of g, as subsets of arrows to flip.
std::vector<EdgeSubset> orientation_flips(const Multigraph& g);

/// `count` graphs drawn uniformly (with repetition) from connected_multigraphs(max_edges).
std::vector<Multigraph> random_sample(int max_edges, std::size_t count, std::mt19937& rng);

}  // namespace lfrep::catalog
