#ifndef IMATCH_PIPELINE_HPP
#define IMATCH_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "imatch/graph.hpp"
#include "imatch/sparsify.hpp"

namespace imatch {

struct PipelineConfig {
  /// The input is declared K_{B,B}-free. B >= 2.
  std::size_t B = 2;
  /// Fixed epsilon; when empty, epsilon = 1 / (2B).
  std::optional<double> epsilon;
  LemmaOverrides lemma;
  std::uint64_t seed = 0;
  bool verify = true;
  /// On exhausted lemma retries, return greedy_induced_matching instead of
  /// failing.
  bool greedy_fallback = false;
  SamplerKind sampler = SamplerKind::independent;

  [[nodiscard]] double resolved_epsilon() const;
};

enum class MatchingSource { lemma, greedy_fallback };

struct PipelineStats {
  std::size_t n = 0;
  std::size_t d = 0;  ///< maximum degree of the input
  bool regular = false;
  std::size_t colors = 0;
  std::size_t matching_size = 0;  ///< largest color class
  /// matching_size < ceil(n/4); the size guarantee does not apply.
  bool matching_below_quarter = false;
  std::size_t gm_vertices = 0;
  std::size_t gm_max_degree = 0;
  std::size_t gm_triangles = 0;
  double epsilon = 0;
  double budget = 0;  ///< gm_vertices * gm_max_degree^(2 - epsilon)
  LemmaPath lemma_path = LemmaPath::sampled;
  std::size_t lemma_attempts = 0;
  std::vector<AttemptStats> attempts;
  MatchingSource source = MatchingSource::lemma;
};

struct InducedMatchingResult {
  Matching matching;  ///< sorted canonical edges of the input graph
  std::size_t size = 0;
  /// Verdict of is_induced_matching; empty when verification was not requested.
  std::optional<bool> certificate;
  PipelineStats stats;
};

enum class PipelineFailure { empty_matching, triangle_budget, retries_exhausted };

[[nodiscard]] const char* to_string(PipelineFailure f);

class PipelineError : public std::runtime_error {
 public:
  PipelineError(PipelineFailure kind, const std::string& what, PipelineStats stats)
      : std::runtime_error(what), kind_(kind), stats_(std::move(stats)) {}
  [[nodiscard]] PipelineFailure kind() const noexcept { return kind_; }
  [[nodiscard]] const PipelineStats& stats() const noexcept { return stats_; }

 private:
  PipelineFailure kind_;
  PipelineStats stats_;
};

/// Induced matching via edge coloring, contraction and the triangle-sparse
/// independent set algorithm:
///   1. Misra–Gries coloring; M = largest color class.
///   2. G_M = contract_matching(G, M).
///   3. Triangles of G_M must not exceed |V(G_M)| * d_M^(2 - epsilon).
///   4. Independent set S of G_M via sparsify_independent_set.
///   5. Pull S back to edges of G.
///   6. If config.verify, certify with is_induced_matching.
/// Throws PipelineError on an edgeless input, a triangle budget violation, or
/// exhausted retries (unless config.greedy_fallback).
[[nodiscard]] InducedMatchingResult induced_matching(const Graph& g, const PipelineConfig& config);

/// Recomputes is_induced_matching from scratch; false also when an edge is
/// absent from the graph.
[[nodiscard]] bool verify_certificate(const Graph& g, const InducedMatchingResult& result);

/// Takes edges in canonical order whenever both endpoints are still available,
/// then blocks the closed neighborhoods of both endpoints.
[[nodiscard]] Matching greedy_induced_matching(const Graph& g);

/// size / ((n/d) * ln d); empty when d < 2.
[[nodiscard]] std::optional<double> scaling_ratio(std::size_t size, std::size_t n, std::size_t d);

}  // namespace imatch

#endif  // IMATCH_PIPELINE_HPP
