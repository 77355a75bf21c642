#include "imatch/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "imatch/fourwise.hpp"

namespace imatch {

LemmaThresholds LemmaParams::thresholds(std::size_t n) const {
  const double np = static_cast<double>(n) * p;
  const double dd = static_cast<double>(d);
  return {np / 2.0, 3.0 * np / 2.0, np / 4.0, 5.0 * static_cast<double>(n) * dd * p * p};
}

LemmaParams lemma_params(std::size_t d, double epsilon, const LemmaOverrides& overrides) {
  if (!(epsilon > 0.0 && epsilon < 3.0)) {
    std::ostringstream msg;
    msg << "epsilon must lie in (0, 3), got " << epsilon;
    throw std::invalid_argument(msg.str());
  }
  if (d < 1) throw std::invalid_argument("maximum degree must be at least 1");
  LemmaParams params;
  params.epsilon = epsilon;
  params.a = epsilon / 3.0;
  params.d = d;
  params.p = std::pow(static_cast<double>(d), params.a - 1.0);
  params.d0 = overrides.d0.value_or(kDefaultD0);
  params.max_retries = overrides.max_retries.value_or(kDefaultMaxRetries);
  return params;
}

double triangle_budget(std::size_t n, std::size_t d, double epsilon) {
  return static_cast<double>(n) * std::pow(static_cast<double>(d), 2.0 - epsilon);
}

VertexSet sample_vertices(const Graph& g, double p, Rng& rng) {
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (rng.bernoulli(p)) out.push_back(v);
  }
  return out;
}

TriangleBreak break_triangles(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);

  TriangleBreak out;
  for (const Triangle& t : enumerate_triangles(g)) {
    if (!alive[t.u] || !alive[t.v] || !alive[t.w]) continue;
    Vertex victim = t.u;
    for (Vertex c : {t.v, t.w}) {
      if (degree[c] > degree[victim]) victim = c;
    }
    alive[victim] = 0;
    out.removed.push_back(victim);
    for (Vertex w : g.neighbors(victim)) {
      if (alive[w]) --degree[w];
    }
  }
  std::sort(out.removed.begin(), out.removed.end());
  VertexSet keep;
  keep.reserve(n - out.removed.size());
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) keep.push_back(v);
  }
  out.remainder = induced_subgraph(g, keep);
  return out;
}

VertexSet shearer_independent_set(const Graph& g) {
  if (count_triangles(g) != 0) {
    throw std::invalid_argument("shearer_independent_set requires a triangle-free graph");
  }
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> degree(n);
  std::vector<char> alive(n, 1);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.emplace(degree[v], v);
  }
  auto remove = [&](Vertex v) {
    alive[v] = 0;
    queue.erase({degree[v], v});
  };
  VertexSet out;
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    out.push_back(v);
    remove(v);
    for (Vertex w : g.neighbors(v)) {
      if (!alive[w]) continue;
      remove(w);
      for (Vertex x : g.neighbors(w)) {
        if (!alive[x]) continue;
        queue.erase({degree[x], x});
        --degree[x];
        queue.emplace(degree[x], x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double shearer_guarantee(std::size_t n, double avg_degree, double c) {
  const double nn = static_cast<double>(n);
  double bound = std::ceil(nn / (avg_degree + 1.0));
  if (avg_degree >= 2.0) bound = std::max(bound, c * nn * std::log(avg_degree) / avg_degree);
  return bound;
}

const char* to_string(AttemptOutcome o) {
  switch (o) {
    case AttemptOutcome::passed: return "passed";
    case AttemptOutcome::too_few_vertices: return "too_few_vertices";
    case AttemptOutcome::too_many_vertices: return "too_many_vertices";
    case AttemptOutcome::too_many_triangles: return "too_many_triangles";
    case AttemptOutcome::too_many_edges: return "too_many_edges";
  }
  return "unknown";
}

namespace {

std::string describe_budget(std::size_t measured, double budget) {
  std::ostringstream msg;
  msg << "triangle budget exceeded: measured " << measured << " triangles, budget n*d^(2-eps) = " << budget;
  return msg.str();
}

std::string describe_attempts(const std::vector<AttemptStats>& stats) {
  std::ostringstream msg;
  msg << "all " << stats.size() << " sampling attempts failed their thresholds";
  for (const auto& s : stats) {
    msg << "\n  attempt " << s.index << ": sampled=" << s.sampled << " triangles=" << s.triangles
        << " edges=" << s.edges << " outcome=" << to_string(s.outcome);
  }
  return msg.str();
}

struct AttemptRun {
  AttemptStats stats;
  Subgraph sample;           // relative to the input graph
  TriangleBreak broken;      // relative to sample.graph
};

VertexSet draw_sample(const Graph& g, double p, std::uint64_t attempt_seed, SamplerKind kind) {
  Rng rng(attempt_seed);
  if (kind == SamplerKind::independent) return sample_vertices(g, p, rng);
  const unsigned k = FourWiseSampler::bits_for(g.num_vertices());
  const auto order = std::uint64_t{1} << k;
  std::array<std::uint32_t, 4> coeffs{};
  for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng.below(order));
  return fourwise_sample(g, p, FourWiseSampler(k, coeffs));
}

AttemptRun run_attempt(const Graph& g, const LemmaParams& params, const VertexSet& sample, std::size_t index,
                       std::uint64_t seed) {
  AttemptRun run;
  run.stats.index = index;
  run.stats.seed = seed;
  run.stats.sampled = sample.size();
  run.sample = induced_subgraph(g, sample);
  run.stats.triangles = count_triangles(run.sample.graph);
  run.broken = break_triangles(run.sample.graph);
  run.stats.edges = run.broken.remainder.graph.num_edges();

  const auto th = params.thresholds(g.num_vertices());
  const auto sampled = static_cast<double>(run.stats.sampled);
  if (sampled < th.v_lo) {
    run.stats.outcome = AttemptOutcome::too_few_vertices;
  } else if (sampled > th.v_hi) {
    run.stats.outcome = AttemptOutcome::too_many_vertices;
  } else if (static_cast<double>(run.stats.triangles) > th.tri_max) {
    run.stats.outcome = AttemptOutcome::too_many_triangles;
  } else if (static_cast<double>(run.stats.edges) > th.edge_max) {
    run.stats.outcome = AttemptOutcome::too_many_edges;
  } else {
    run.stats.outcome = AttemptOutcome::passed;
  }
  return run;
}

// Greedy step on the triangle-free remainder, mapped back through the
// triangle-breaking and sampling relabellings.
void finish(const AttemptRun& run, IndependentSetResult& result) {
  const Graph& core = run.broken.remainder.graph;
  result.average_degree_after = average_degree(core);
  for (Vertex v : shearer_independent_set(core)) {
    result.set.push_back(run.sample.to_parent[run.broken.remainder.to_parent[v]]);
  }
  std::sort(result.set.begin(), result.set.end());
}

void check_preconditions(const Graph& g, const LemmaParams& params) {
  const auto profile = degree_profile(g);
  if (profile.max_degree != params.d) {
    throw std::invalid_argument("params.d = " + std::to_string(params.d) + " but the graph has maximum degree " +
                                std::to_string(profile.max_degree));
  }
  const std::size_t measured = count_triangles(g);
  const double budget = triangle_budget(g.num_vertices(), params.d, params.epsilon);
  if (static_cast<double>(measured) > budget) throw TriangleBudgetError(measured, budget);
}

IndependentSetResult bypass(const Graph& g) {
  IndependentSetResult result;
  result.path = LemmaPath::bypass;
  AttemptRun run;
  run.sample = induced_subgraph(g, [&] {
    VertexSet all(g.num_vertices());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return all;
  }());
  run.broken = break_triangles(run.sample.graph);
  finish(run, result);
  return result;
}

}  // namespace

TriangleBudgetError::TriangleBudgetError(std::size_t measured, double budget)
    : std::runtime_error(describe_budget(measured, budget)), measured_(measured), budget_(budget) {}

RetriesExhaustedError::RetriesExhaustedError(std::vector<AttemptStats> stats)
    : std::runtime_error(describe_attempts(stats)), stats_(std::move(stats)) {}

AttemptStats sparsify_attempt(const Graph& g, const LemmaParams& params, std::uint64_t attempt_seed,
                              SamplerKind sampler) {
  const auto sample = draw_sample(g, params.p, attempt_seed, sampler);
  return run_attempt(g, params, sample, 0, attempt_seed).stats;
}

IndependentSetResult sparsify_independent_set(const Graph& g, const LemmaParams& params, std::uint64_t seed,
                                              SamplerKind sampler) {
  if (g.num_edges() == 0) {
    IndependentSetResult result;
    result.path = LemmaPath::edgeless;
    result.set.resize(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) result.set[v] = v;
    return result;
  }
  check_preconditions(g, params);
  if (params.d <= params.d0) return bypass(g);

  IndependentSetResult result;
  result.path = LemmaPath::sampled;
  for (std::size_t i = 0; i < params.max_retries; ++i) {
    const std::uint64_t attempt_seed = split_seed(seed, i);
    const auto run = run_attempt(g, params, draw_sample(g, params.p, attempt_seed, sampler), i, attempt_seed);
    result.stats.push_back(run.stats);
    result.attempts = i + 1;
    if (run.stats.outcome == AttemptOutcome::passed) {
      finish(run, result);
      return result;
    }
  }
  throw RetriesExhaustedError(std::move(result.stats));
}

IndependentSetResult derandomized_independent_set(const Graph& g, const LemmaParams& params,
                                                  std::uint64_t max_tuples) {
  if (g.num_edges() == 0 || params.d <= params.d0) return sparsify_independent_set(g, params, 0);
  check_preconditions(g, params);
  const unsigned k = FourWiseSampler::bits_for(g.num_vertices());
  const std::uint64_t order = std::uint64_t{1} << k;
  // 2^(4k) tuples; saturate for k >= 16.
  const std::uint64_t space = k >= 16 ? ~std::uint64_t{0} : std::uint64_t{1} << (4 * k);
  const std::uint64_t limit = std::min(space, max_tuples);

  IndependentSetResult result;
  result.path = LemmaPath::sampled;
  for (std::uint64_t t = 0; t < limit; ++t) {
    std::array<std::uint32_t, 4> coeffs{};
    std::uint64_t rest = t;
    for (int j = 3; j >= 0; --j) {
      coeffs[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(rest % order);
      rest /= order;
    }
    const auto sample = fourwise_sample(g, params.p, FourWiseSampler(k, coeffs));
    const auto run = run_attempt(g, params, sample, t, t);
    result.attempts = t + 1;
    if (run.stats.outcome == AttemptOutcome::passed) {
      result.stats.push_back(run.stats);
      finish(run, result);
      return result;
    }
    if (result.stats.size() < 64) result.stats.push_back(run.stats);
  }
  throw RetriesExhaustedError(std::move(result.stats));
}

}  // namespace imatch
