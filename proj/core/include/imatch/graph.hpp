#ifndef IMATCH_GRAPH_HPP
#define IMATCH_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace imatch {

using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Undirected edge. Canonical form has u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  [[nodiscard]] constexpr Edge canonical() const noexcept {
    return u < v ? Edge{u, v} : Edge{v, u};
  }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

/// A set of pairwise vertex-disjoint edges, each in canonical form.
using Matching = std::vector<Edge>;

/// Triangle with u < v < w.
struct Triangle {
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;
  friend constexpr auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Thrown on malformed input to a graph operation (bad vertex ids, self-loops,
/// edges absent from the host graph).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted and duplicate-free; the graph has no self-loops
/// and u ∈ adj(v) ⇔ v ∈ adj(u). Instances are safe to share across threads
/// for reads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an unordered edge list. Duplicate pairs and reversed
  /// pairs collapse. Throws GraphError on self-loops or out-of-range ids.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  [[nodiscard]] std::size_t num_vertices() const noexcept { return adj_.size(); }
  [[nodiscard]] std::size_t num_edges() const noexcept { return m_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;

  /// All edges in canonical form, sorted lexicographically.
  [[nodiscard]] std::vector<Edge> edges() const;

  [[nodiscard]] bool contains(Vertex v) const noexcept { return v < adj_.size(); }

  /// Walks the adjacency structure and checks every representation invariant.
  /// Returns an empty string when valid, otherwise a description of the first
  /// violation found.
  [[nodiscard]] std::string validate() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

struct DegreeProfile {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  bool is_regular = true;
  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

[[nodiscard]] DegreeProfile degree_profile(const Graph& g);

[[nodiscard]] double average_degree(const Graph& g);

/// Every triangle exactly once, canonically ordered and sorted.
///
/// Edges are oriented from lower to higher (degree, id) rank; each triangle is
/// found once at its lowest-ranked vertex by intersecting forward lists.
[[nodiscard]] std::vector<Triangle> enumerate_triangles(const Graph& g);

[[nodiscard]] std::size_t count_triangles(const Graph& g);

/// Result of restricting a graph to a vertex subset.
struct Subgraph {
  Graph graph;
  /// new id -> id in the parent graph; increasing.
  std::vector<Vertex> to_parent;
  /// parent id -> new id, kNoVertex for vertices outside the subset.
  std::vector<Vertex> from_parent;
};

/// Subgraph induced by `keep`. The members of `keep` are relabelled 0..|keep|-1
/// in increasing order. Throws GraphError for invalid or repeated members.
[[nodiscard]] Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

[[nodiscard]] bool is_independent_set(const Graph& g, std::span<const Vertex> set);

/// True iff the edges are pairwise vertex-disjoint. Does not consult a host
/// graph.
[[nodiscard]] bool is_matching(std::span<const Edge> m);

/// True iff `m` is a matching of `g` and no edge of `g` joins endpoints of two
/// different edges of `m`. Throws GraphError if some edge of `m` is absent from
/// `g`.
[[nodiscard]] bool is_induced_matching(const Graph& g, std::span<const Edge> m);

}  // namespace imatch

#endif  // IMATCH_GRAPH_HPP
