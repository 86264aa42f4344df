#include "pstlie/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace pstlie {

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= n || v >= n) throw std::out_of_range("Graph::add_edge: vertex out of range");
  adj[u].push_back(v);
  if (u != v) adj[v].push_back(u);
}

void Graph::normalize() {
  for (auto& l : adj) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
  return std::binary_search(adj.at(u).begin(), adj.at(u).end(), v);
}

std::uint64_t Graph::edge_count() const {
  std::uint64_t deg = 0, loops = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    deg += adj[u].size();
    if (has_edge(u, u)) ++loops;
  }
  return (deg - loops) / 2 + loops;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v : adj[u])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::is_symmetric() const {
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v : adj[u])
      if (!has_edge(v, u)) return false;
  return true;
}

bool Graph::has_loops() const {
  for (std::uint32_t u = 0; u < n; ++u)
    if (has_edge(u, u)) return true;
  return false;
}

std::int64_t Graph::regular_degree() const {
  if (n == 0) return 0;
  const std::size_t d = adj[0].size();
  for (const auto& l : adj)
    if (l.size() != d) return -1;
  return static_cast<std::int64_t>(d);
}

std::uint32_t Graph::component_count() const {
  DisjointSets ds(n);
  std::uint32_t comps = n;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v : adj[u])
      if (ds.unite(u, v)) --comps;
  return comps;
}

bool Graph::is_connected() const { return component_count() <= 1; }

std::vector<std::int32_t> Graph::distances_from(std::uint32_t s) const {
  std::vector<std::int32_t> dist(n, -1);
  std::queue<std::uint32_t> bfs;
  dist.at(s) = 0;
  bfs.push(s);
  while (!bfs.empty()) {
    const std::uint32_t u = bfs.front();
    bfs.pop();
    for (std::uint32_t v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        bfs.push(v);
      }
  }
  return dist;
}

Graph complete_graph(std::uint32_t n) {
  Graph g(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  g.normalize();
  return g;
}

Graph cycle_graph(std::uint32_t n) {
  Graph g(n);
  for (std::uint32_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  g.normalize();
  return g;
}

Graph path_graph(std::uint32_t n) {
  Graph g(n);
  for (std::uint32_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  g.normalize();
  return g;
}

}  // namespace pstlie
