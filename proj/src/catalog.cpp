#include "lfrep/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lfrep/errors.hpp"

namespace lfrep::catalog {

Multigraph point() { return Multigraph(1); }

Multigraph cycle(int n) {
  if (n < 1) throw InvalidArgument("cycle needs at least one vertex");
  Multigraph g(n);
  for (int i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
  return g;
}

Multigraph path(int n) {
  if (n < 1) throw InvalidArgument("path needs at least one vertex");
  Multigraph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph bouquet(int m) {
  if (m < 0) throw InvalidArgument("negative loop count");
  Multigraph g(1);
  for (int i = 0; i < m; ++i) g.add_edge(1, 1);
  return g;
}

Multigraph dipole(int k) {
  if (k < 0) throw InvalidArgument("negative edge count");
  Multigraph g(2);
  for (int i = 0; i < k; ++i) g.add_edge(1, 2);
  return g;
}

namespace {

int parse_count(const std::string& name, const std::string& digits) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 4)
    throw InvalidArgument("unknown builtin graph '" + name + "'");
  return std::stoi(digits);
}

}  // namespace

Multigraph builtin(const std::string& name) {
  if (name == "point") return point();
  if (name.rfind("Sm:", 0) == 0) return bouquet(parse_count(name, name.substr(3)));
  if (!name.empty()) {
    const std::string rest = name.substr(1);
    switch (name[0]) {
      case 'C': return cycle(parse_count(name, rest));
      case 'A': return path(parse_count(name, rest));
      case 'D': return dipole(parse_count(name, rest));
      default: break;
    }
  }
  throw InvalidArgument("unknown builtin graph '" + name + "'");
}

std::vector<std::pair<int, int>> canonical_key(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::pair<int, int>> best;
  bool first = true;
  do {
    std::vector<std::pair<int, int>> key;
    key.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
      int a = perm[e.u - 1];
      int b = perm[e.v - 1];
      key.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(key.begin(), key.end());
    if (first || key < best) best = std::move(key);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Multigraph> connected_multigraphs(int max_edges) {
  if (max_edges < 0 || max_edges > 6) throw InvalidArgument("catalog supports at most 6 edges");
  std::vector<Multigraph> out{point()};
  for (int m = 1; m <= max_edges; ++m) {
    for (int n = 1; n <= m + 1; ++n) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) pairs.emplace_back(i, j);
      std::set<std::vector<std::pair<int, int>>> seen;
      // Multisets of m pairs as non-decreasing index sequences.
      std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
      while (true) {
        Multigraph g(n);
        for (auto idx : pick) g.add_edge(pairs[idx].first, pairs[idx].second);
        if (is_connected(g) && seen.insert(canonical_key(g)).second) out.push_back(std::move(g));
        int k = m - 1;
        while (k >= 0 && pick[k] + 1 == pairs.size()) --k;
        if (k < 0) break;
        ++pick[k];
        for (int j = k + 1; j < m; ++j) pick[j] = pick[k];
      }
    }
  }
  return out;
}

std::vector<EdgeSubset> orientation_flips(const Multigraph& g) {
  const auto ids = g.edge_ids();
  std::vector<EdgeSubset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ids.size()); ++mask) {
    std::vector<EdgeId> flip;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if ((mask >> i) & 1U) flip.push_back(ids[i]);
    out.emplace_back(std::move(flip));
  }
  return out;
}

std::vector<Multigraph> random_sample(int max_edges, std::size_t count, std::mt19937& rng) {
  const auto all = connected_multigraphs(max_edges);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::vector<Multigraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(all[pick(rng)]);
  return out;
}

}  // namespace lfrep::catalog
