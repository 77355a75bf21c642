#ifndef IMATCH_ORACLE_HPP
#define IMATCH_ORACLE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "imatch/graph.hpp"

// Exhaustive reference implementations. Exponential; only for small graphs.

namespace imatch::oracle {

struct OracleLimit {
  std::size_t induced_matching = 16;
  std::size_t independent_set = 16;
  std::size_t triangles = 64;
  std::size_t kbb = 20;
};

inline constexpr OracleLimit kDefaultLimit{};

class OracleLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Branches on the lowest free vertex: either it stays unmatched, or it is
/// matched to a free neighbor and both closed neighborhoods leave the pool.
[[nodiscard]] std::pair<std::size_t, Matching> max_induced_matching_bf(const Graph& g,
                                                                       const OracleLimit& limit = kDefaultLimit);

[[nodiscard]] std::pair<std::size_t, VertexSet> max_independent_set_bf(const Graph& g,
                                                                       const OracleLimit& limit = kDefaultLimit);

/// Tests every vertex triple.
[[nodiscard]] std::size_t count_triangles_bf(const Graph& g, const OracleLimit& limit = kDefaultLimit);

/// True iff two disjoint B-sets are completely joined.
[[nodiscard]] bool contains_kbb_bf(const Graph& g, std::size_t B, const OracleLimit& limit = kDefaultLimit);

[[nodiscard]] bool is_c4_free_bf(const Graph& g, const OracleLimit& limit = kDefaultLimit);

}  // namespace imatch::oracle

#endif  // IMATCH_ORACLE_HPP
