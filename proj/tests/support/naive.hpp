// Test-only reference checks. Deliberately naive: adjacency matrices and raw
// subset enumeration, sharing no code paths with the library's fast routines
// or its branch-and-bound oracles.
#ifndef IMATCH_TESTS_NAIVE_HPP
#define IMATCH_TESTS_NAIVE_HPP

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "imatch/graph.hpp"
#include "imatch/random.hpp"

namespace naive {

using imatch::Edge;
using imatch::Graph;
using imatch::Vertex;

using Matrix = std::vector<std::vector<char>>;

inline Matrix adjacency_matrix(const Graph& g) {
  const auto n = g.num_vertices();
  Matrix a(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

inline std::size_t triangles(const Graph& g) {
  const auto a = adjacency_matrix(g);
  const auto n = a.size();
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t += a[i][j] && a[j][k] && a[i][k];
  return t / 6;
}

/// Length of the shortest cycle, 0 if acyclic. BFS from every vertex.
inline std::size_t girth(const Graph& g) {
  const auto n = g.num_vertices();
  std::size_t best = 0;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::vector<Vertex> parent(n, imatch::kNoVertex);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          const std::size_t len = dist[u] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

/// A 4-cycle exists iff some pair of distinct vertices has two common
/// neighbors.
inline bool c4_free(const Graph& g) {
  const auto a = adjacency_matrix(g);
  const auto n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int common = 0;
      for (std::size_t k = 0; k < n; ++k) common += a[i][k] && a[j][k];
      if (common >= 2) return false;
    }
  return true;
}

/// Induced-matching test straight from the definition: the subgraph induced
/// on V(M) has exactly |M| edges and M is a matching inside the graph.
inline bool induced_matching(const Graph& g, const std::vector<Edge>& m) {
  const auto a = adjacency_matrix(g);
  std::vector<Vertex> verts;
  for (const Edge& e : m) {
    if (!a[e.u][e.v]) return false;
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) return false;
  std::size_t induced_edges = 0;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) induced_edges += a[verts[i]][verts[j]];
  return induced_edges == m.size();
}

/// Maximum induced matching by trying all 2^m edge subsets (m <= 24).
inline std::size_t max_induced_matching(const Graph& g) {
  const auto edges = g.edges();
  std::size_t best = 0;
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto bits = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (bits <= best) continue;
    std::vector<Edge> m;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1U) m.push_back(edges[i]);
    if (induced_matching(g, m)) best = bits;
  }
  return best;
}

/// Maximum independent set by trying all 2^n vertex subsets (n <= 24).
inline std::size_t max_independent_set(const Graph& g) {
  const auto a = adjacency_matrix(g);
  const auto n = a.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto bits = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (bits <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1U) && (mask >> j & 1U) && a[i][j]) ok = false;
    if (ok) best = bits;
  }
  return best;
}

/// Erdős–Rényi G(n, p) for property tests.
inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  imatch::Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) edges.push_back({i, j});
  return Graph::from_edge_list(n, edges);
}

}  // namespace naive

#endif  // IMATCH_TESTS_NAIVE_HPP
