#include "imatch/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "imatch/matching.hpp"

namespace imatch {

double PipelineConfig::resolved_epsilon() const {
  if (B < 2) throw std::invalid_argument("B must be at least 2");
  return epsilon.value_or(1.0 / (2.0 * static_cast<double>(B)));
}

const char* to_string(PipelineFailure f) {
  switch (f) {
    case PipelineFailure::empty_matching: return "empty_matching";
    case PipelineFailure::triangle_budget: return "triangle_budget";
    case PipelineFailure::retries_exhausted: return "retries_exhausted";
  }
  return "unknown";
}

InducedMatchingResult induced_matching(const Graph& g, const PipelineConfig& config) {
  InducedMatchingResult result;
  PipelineStats& stats = result.stats;
  stats.epsilon = config.resolved_epsilon();
  const auto profile = degree_profile(g);
  stats.n = g.num_vertices();
  stats.d = profile.max_degree;
  stats.regular = profile.is_regular;

  const auto coloring = misra_gries_edge_color(g);
  const Matching m = extract_matching(coloring);
  stats.colors = coloring.num_colors;
  stats.matching_size = m.size();
  stats.matching_below_quarter = m.size() < (g.num_vertices() + 3) / 4;
  if (m.empty()) {
    throw PipelineError(PipelineFailure::empty_matching, "empty matching: the input graph has no edges", stats);
  }

  const auto contracted = contract_matching(g, m);
  const Graph& gm = contracted.graph;
  stats.gm_vertices = gm.num_vertices();
  stats.gm_max_degree = degree_profile(gm).max_degree;
  stats.gm_triangles = count_triangles(gm);
  stats.budget = triangle_budget(stats.gm_vertices, stats.gm_max_degree, stats.epsilon);
  if (static_cast<double>(stats.gm_triangles) > stats.budget) {
    throw PipelineError(PipelineFailure::triangle_budget,
                        TriangleBudgetError(stats.gm_triangles, stats.budget).what(), stats);
  }

  VertexSet independent;
  if (gm.num_edges() == 0) {
    independent.resize(gm.num_vertices());
    for (Vertex x = 0; x < gm.num_vertices(); ++x) independent[x] = x;
    stats.lemma_path = LemmaPath::edgeless;
  } else {
    const auto params = lemma_params(stats.gm_max_degree, stats.epsilon, config.lemma);
    try {
      auto lemma = sparsify_independent_set(gm, params, config.seed, config.sampler);
      independent = std::move(lemma.set);
      stats.lemma_path = lemma.path;
      stats.lemma_attempts = lemma.attempts;
      stats.attempts = std::move(lemma.stats);
    } catch (const RetriesExhaustedError& e) {
      stats.lemma_attempts = e.stats().size();
      stats.attempts = e.stats();
      if (!config.greedy_fallback) {
        throw PipelineError(PipelineFailure::retries_exhausted, e.what(), stats);
      }
      stats.source = MatchingSource::greedy_fallback;
    }
  }

  if (stats.source == MatchingSource::greedy_fallback) {
    result.matching = greedy_induced_matching(g);
  } else {
    result.matching = pull_back(contracted, independent);
  }
  result.size = result.matching.size();
  if (config.verify) result.certificate = is_induced_matching(g, result.matching);
  return result;
}

bool verify_certificate(const Graph& g, const InducedMatchingResult& result) {
  try {
    return result.size == result.matching.size() && is_induced_matching(g, result.matching);
  } catch (const GraphError&) {
    return false;
  }
}

Matching greedy_induced_matching(const Graph& g) {
  std::vector<char> blocked(g.num_vertices(), 0);
  Matching out;
  for (const Edge& e : g.edges()) {
    if (blocked[e.u] || blocked[e.v]) continue;
    out.push_back(e);
    for (Vertex end : {e.u, e.v}) {
      blocked[end] = 1;
      for (Vertex w : g.neighbors(end)) blocked[w] = 1;
    }
  }
  return out;
}

std::optional<double> scaling_ratio(std::size_t size, std::size_t n, std::size_t d) {
  if (d < 2 || n == 0) return std::nullopt;
  const double dd = static_cast<double>(d);
  return static_cast<double>(size) / ((static_cast<double>(n) / dd) * std::log(dd));
}

}  // namespace imatch
