#ifndef IMATCH_MATCHING_HPP
#define IMATCH_MATCHING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "imatch/graph.hpp"

namespace imatch {

/// Colors of the edges of a host graph, indexed like Graph::edges() (canonical,
/// sorted). Color ids are contiguous in [0, num_colors).
struct EdgeColoring {
  std::vector<Edge> edges;
  std::vector<std::uint32_t> color;
  std::uint32_t num_colors = 0;
};

/// True iff every host edge is colored exactly once, colors lie in
/// [0, num_colors), and edges sharing an endpoint have different colors.
[[nodiscard]] bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& c);

/// Misra–Gries constructive Vizing coloring with at most Δ+1 colors.
///
/// Edges are processed in canonical order. Fans are grown from the lowest
/// numbered admissible neighbor, and free colors are always the lowest
/// numbered ones, so the result is a deterministic function of the graph.
[[nodiscard]] EdgeColoring misra_gries_edge_color(const Graph& g);

/// The largest color class (lowest color id on ties), sorted.
[[nodiscard]] Matching extract_matching(const EdgeColoring& coloring);

/// Maximal matching from a seeded random edge order. Sorted.
[[nodiscard]] Matching greedy_maximal_matching(const Graph& g, std::uint64_t seed);

/// G_M: one vertex per matching edge; x ~ y iff some edge of G joins an
/// endpoint of rep[x] to an endpoint of rep[y].
struct ContractedGraph {
  Graph graph;
  /// contracted vertex -> matching edge of the host graph
  std::vector<Edge> rep;
  /// host vertex -> contracted vertex, kNoVertex for unmatched host vertices
  std::vector<Vertex> inv_rep;
};

/// Contracts the edges of `m` inside the subgraph of `g` induced by V(m).
/// Contracted vertex x represents m[x]. Throws GraphError if `m` is not a
/// matching of `g`.
[[nodiscard]] ContractedGraph contract_matching(const Graph& g, std::span<const Edge> m);

/// Maps a vertex set of the contracted graph back to matching edges (sorted).
[[nodiscard]] Matching pull_back(const ContractedGraph& cg, std::span<const Vertex> set);

}  // namespace imatch

#endif  // IMATCH_MATCHING_HPP
