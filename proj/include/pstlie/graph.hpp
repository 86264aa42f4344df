#pragma once

// Simple undirected graphs on vertices 0..n-1.

#include <cstdint>
#include <utility>
#include <vector>

namespace pstlie {

struct Graph {
  std::uint32_t n = 0;
  std::vector<std::vector<std::uint32_t>> adj;  // sorted neighbour lists

  explicit Graph(std::uint32_t vertices = 0) : n(vertices), adj(vertices) {}

  void add_edge(std::uint32_t u, std::uint32_t v);
  /// Sorts neighbour lists and removes duplicates.
  void normalize();

  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  std::uint64_t edge_count() const;
  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
  bool is_symmetric() const;
  bool has_loops() const;
  /// Common degree if regular, -1 otherwise.
  std::int64_t regular_degree() const;
  /// Connectivity via union-find.
  bool is_connected() const;
  std::uint32_t component_count() const;
  /// BFS distances from s; unreachable vertices get -1.
  std::vector<std::int32_t> distances_from(std::uint32_t s) const;
};

Graph complete_graph(std::uint32_t n);
Graph cycle_graph(std::uint32_t n);
Graph path_graph(std::uint32_t n);

}  // namespace pstlie
