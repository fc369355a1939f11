#pragma once

#include <cstdint>

namespace lfrep {

/// Size limits for exponential enumerations. Every engine that walks a
/// subset lattice, a group or a point set checks against these first and
/// throws GuardExceeded rather than running away.
struct Limits {
  /// Largest edge count for 2^|E| subset sums and ordered-Bell filtration sums.
  int max_edges = 20;
  /// Largest number of depth functions d^|E| summed by the toric counts.
  std::uint64_t max_depth_functions = std::uint64_t{1} << 26;
  /// Largest group order walked by a Burnside loop.
  std::uint64_t max_group = std::uint64_t{1} << 30;
  /// Largest point set enumerated explicitly (fixed subspaces, orbit partitions).
  std::uint64_t max_points = std::uint64_t{1} << 24;
  /// Largest matrix space scanned when listing GL_n(R), and largest memo table.
  std::uint64_t max_table = std::uint64_t{1} << 26;
  /// Disables all of the above.
  bool unlimited = false;

  bool allows_edges(std::uint64_t m) const { return unlimited || m <= static_cast<std::uint64_t>(max_edges); }
  bool allows_group(std::uint64_t n) const { return unlimited || n <= max_group; }
  bool allows_points(std::uint64_t n) const { return unlimited || n <= max_points; }
  bool allows_table(std::uint64_t n) const { return unlimited || n <= max_table; }
};

}  // namespace lfrep
