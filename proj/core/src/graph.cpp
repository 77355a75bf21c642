#include "imatch/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace imatch {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  if (n >= kNoVertex) throw GraphError("vertex count too large");
  Graph g;
  g.adj_.resize(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      std::ostringstream msg;
      msg << "edge (" << e.u << ", " << e.v << ") has an endpoint outside [0, " << n << ")";
      throw GraphError(msg.str());
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  std::size_t total = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.shrink_to_fit();
    total += list.size();
  }
  g.m_ = total / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::string Graph::validate() const {
  std::size_t total = 0;
  for (Vertex v = 0; v < adj_.size(); ++v) {
    const auto& list = adj_[v];
    total += list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Vertex w = list[i];
      if (w >= adj_.size()) return "vertex " + std::to_string(v) + " has out-of-range neighbor";
      if (w == v) return "self-loop at vertex " + std::to_string(v);
      if (i > 0 && list[i - 1] >= w) {
        return "adjacency of vertex " + std::to_string(v) + " is unsorted or has duplicates";
      }
      if (!std::binary_search(adj_[w].begin(), adj_[w].end(), v)) {
        return "asymmetric edge " + std::to_string(v) + "->" + std::to_string(w);
      }
    }
  }
  if (total != 2 * m_) return "edge count does not match adjacency";
  return {};
}

DegreeProfile degree_profile(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return {};
  DegreeProfile p{g.degree(0), g.degree(0), true};
  for (Vertex v = 1; v < n; ++v) {
    p.min_degree = std::min(p.min_degree, g.degree(v));
    p.max_degree = std::max(p.max_degree, g.degree(v));
  }
  p.is_regular = p.min_degree == p.max_degree;
  return p;
}

double average_degree(const Graph& g) {
  if (g.num_vertices() == 0) return 0.0;
  return 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_vertices());
}

namespace {

// Forward adjacency: for each vertex, its neighbors of strictly higher rank,
// where rank orders by (degree, id). Lists are sorted by vertex id.
std::vector<std::vector<Vertex>> forward_adjacency(const Graph& g) {
  const std::size_t n = g.num_vertices();
  auto ranks_below = [&g](Vertex a, Vertex b) {
    const auto da = g.degree(a);
    const auto db = g.degree(b);
    return da < db || (da == db && a < b);
  };
  std::vector<std::vector<Vertex>> fwd(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (ranks_below(u, v)) fwd[u].push_back(v);
    }
  }
  return fwd;
}

template <typename Visit>
void for_each_triangle(const Graph& g, Visit&& visit) {
  const auto fwd = forward_adjacency(g);
  for (Vertex u = 0; u < fwd.size(); ++u) {
    const auto& fu = fwd[u];
    for (Vertex v : fu) {
      const auto& fv = fwd[v];
      auto i = fu.begin();
      auto j = fv.begin();
      while (i != fu.end() && j != fv.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          visit(u, v, *i);
          ++i;
          ++j;
        }
      }
    }
  }
}

}  // namespace

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for_each_triangle(g, [&out](Vertex a, Vertex b, Vertex c) {
    Vertex t[3] = {a, b, c};
    std::sort(t, t + 3);
    out.push_back({t[0], t[1], t[2]});
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_triangles(const Graph& g) {
  std::size_t count = 0;
  for_each_triangle(g, [&count](Vertex, Vertex, Vertex) { ++count; });
  return count;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  const std::size_t n = g.num_vertices();
  Subgraph sub;
  sub.from_parent.assign(n, kNoVertex);
  sub.to_parent.assign(keep.begin(), keep.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    const Vertex v = sub.to_parent[i];
    if (v >= n) throw GraphError("vertex " + std::to_string(v) + " not in graph");
    if (i > 0 && sub.to_parent[i - 1] == v) {
      throw GraphError("vertex " + std::to_string(v) + " repeated in subset");
    }
    sub.from_parent[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < sub.to_parent.size(); ++i) {
    for (Vertex w : g.neighbors(sub.to_parent[i])) {
      const Vertex j = sub.from_parent[w];
      if (j != kNoVertex && i < j) edges.push_back({i, j});
    }
  }
  sub.graph = Graph::from_edge_list(sub.to_parent.size(), edges);
  return sub;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : set) {
    if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " not in graph");
    in[v] = 1;
  }
  for (Vertex v : set) {
    for (Vertex w : g.neighbors(v)) {
      if (in[w]) return false;
    }
  }
  return true;
}

bool is_matching(std::span<const Edge> m) {
  std::vector<Vertex> ends;
  ends.reserve(2 * m.size());
  for (const Edge& e : m) {
    if (e.u == e.v) return false;
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

bool is_induced_matching(const Graph& g, std::span<const Edge> m) {
  for (const Edge& e : m) {
    if (!g.has_edge(e.u, e.v)) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") is not in the graph");
    }
  }
  if (!is_matching(m)) return false;
  std::vector<Vertex> partner(g.num_vertices(), kNoVertex);
  for (const Edge& e : m) {
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }
  for (const Edge& e : m) {
    for (Vertex end : {e.u, e.v}) {
      for (Vertex w : g.neighbors(end)) {
        if (partner[w] != kNoVertex && w != partner[end]) return false;
      }
    }
  }
  return true;
}

}  // namespace imatch
