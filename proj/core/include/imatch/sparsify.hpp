#ifndef IMATCH_SPARSIFY_HPP
#define IMATCH_SPARSIFY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "imatch/graph.hpp"
#include "imatch/random.hpp"

namespace imatch {

inline constexpr std::size_t kDefaultD0 = 16;
inline constexpr std::size_t kDefaultMaxRetries = 50;

/// Lower-bound constant for the triangle-free independent set routine:
/// shearer_independent_set returns at least c * n * ln(d̄) / d̄ vertices when
/// the average degree d̄ is at least 2. Calibrated on the generator corpus
/// (see tests/sparsify_test.cpp).
inline constexpr double kShearerConstant = 0.9;

struct LemmaOverrides {
  std::optional<std::size_t> d0;
  std::optional<std::size_t> max_retries;
};

/// Acceptance thresholds of one sampling attempt on an n-vertex input.
struct LemmaThresholds {
  double v_lo = 0;      ///< np/2
  double v_hi = 0;      ///< 3np/2
  double tri_max = 0;   ///< np/4
  double edge_max = 0;  ///< 5ndp^2
};

/// Parameters of the triangle-sparse independent set algorithm.
struct LemmaParams {
  double epsilon = 1.0;
  double a = 1.0 / 3.0;  ///< epsilon / 3
  double p = 1.0;        ///< d^(a-1)
  std::size_t d = 1;     ///< maximum degree of the input
  std::size_t d0 = kDefaultD0;
  std::size_t max_retries = kDefaultMaxRetries;

  [[nodiscard]] LemmaThresholds thresholds(std::size_t n) const;
};

/// Throws std::invalid_argument unless 0 < epsilon < 3 and d >= 1.
[[nodiscard]] LemmaParams lemma_params(std::size_t d, double epsilon, const LemmaOverrides& overrides = {});

/// n * d^(2 - epsilon): the triangle count the lemma tolerates.
[[nodiscard]] double triangle_budget(std::size_t n, std::size_t d, double epsilon);

/// Keeps each vertex independently with probability p (53-bit draw < p).
[[nodiscard]] VertexSet sample_vertices(const Graph& g, double p, Rng& rng);

struct TriangleBreak {
  Subgraph remainder;  ///< triangle-free; maps relative to the input graph
  VertexSet removed;
};

/// Walks the sorted triangle list once; for each triangle whose three vertices
/// are all still present, deletes the one of highest current degree (lowest id
/// on ties).
[[nodiscard]] TriangleBreak break_triangles(const Graph& g);

/// Minimum-degree greedy on a triangle-free graph: repeatedly takes a vertex of
/// minimum remaining degree (lowest id on ties) and deletes its closed
/// neighborhood. Throws std::invalid_argument if the graph has a triangle.
[[nodiscard]] VertexSet shearer_independent_set(const Graph& g);

/// max(ceil(n / (d̄ + 1)), c * n * ln(d̄) / d̄), the second term only for d̄ >= 2.
[[nodiscard]] double shearer_guarantee(std::size_t n, double avg_degree, double c = kShearerConstant);

enum class SamplerKind { independent, fourwise };

enum class AttemptOutcome { passed, too_few_vertices, too_many_vertices, too_many_triangles, too_many_edges };

[[nodiscard]] const char* to_string(AttemptOutcome o);

struct AttemptStats {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t sampled = 0;
  std::size_t triangles = 0;  ///< triangles inside the sample
  std::size_t edges = 0;      ///< edges left after triangle breaking
  AttemptOutcome outcome = AttemptOutcome::passed;
};

enum class LemmaPath { edgeless, bypass, sampled };

struct IndependentSetResult {
  VertexSet set;  ///< independent in the input graph, sorted
  LemmaPath path = LemmaPath::sampled;
  std::size_t attempts = 0;  ///< sampling attempts made (0 off the sampled path)
  std::vector<AttemptStats> stats;
  double average_degree_after = 0;  ///< of the triangle-free graph handed to the greedy step
};

/// Input has more triangles than n * d^(2 - epsilon).
class TriangleBudgetError : public std::runtime_error {
 public:
  TriangleBudgetError(std::size_t measured, double budget);
  [[nodiscard]] std::size_t measured() const noexcept { return measured_; }
  [[nodiscard]] double budget() const noexcept { return budget_; }

 private:
  std::size_t measured_;
  double budget_;
};

/// Every sampling attempt failed its thresholds.
class RetriesExhaustedError : public std::runtime_error {
 public:
  explicit RetriesExhaustedError(std::vector<AttemptStats> stats);
  [[nodiscard]] const std::vector<AttemptStats>& stats() const noexcept { return stats_; }

 private:
  std::vector<AttemptStats> stats_;
};

/// Runs one sampling attempt (sample, break triangles, check thresholds) with
/// the given attempt seed. Exposed for statistics and tests.
[[nodiscard]] AttemptStats sparsify_attempt(const Graph& g, const LemmaParams& params, std::uint64_t attempt_seed,
                                            SamplerKind sampler = SamplerKind::independent);

/// Independent set of a graph with few triangles.
///
/// Edgeless inputs return every vertex. If params.d <= params.d0 the sampling
/// step is skipped: triangles are broken on the whole graph and the greedy
/// routine runs directly. Otherwise attempt i uses seed split_seed(seed, i) and
/// the first attempt (in index order) that passes its thresholds is completed
/// and returned.
///
/// Throws TriangleBudgetError if the input has more than n * d^(2 - epsilon)
/// triangles, RetriesExhaustedError if all max_retries attempts fail, and
/// std::invalid_argument if params.d differs from the input's maximum degree.
[[nodiscard]] IndependentSetResult sparsify_independent_set(const Graph& g, const LemmaParams& params,
                                                            std::uint64_t seed,
                                                            SamplerKind sampler = SamplerKind::independent);

/// Deterministic variant: tries 4-wise coefficient tuples in enumeration
/// order (tuple index i has base-2^k digits c3, c2, c1, c0 from least
/// significant) instead of random samples, stopping at the first passing tuple
/// or after max_tuples. Intended for small instances.
[[nodiscard]] IndependentSetResult derandomized_independent_set(const Graph& g, const LemmaParams& params,
                                                                std::uint64_t max_tuples);

}  // namespace imatch

#endif  // IMATCH_SPARSIFY_HPP
