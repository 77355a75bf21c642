#ifndef IMATCH_GENERATORS_HPP
#define IMATCH_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "imatch/graph.hpp"

namespace imatch {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

[[nodiscard]] bool is_prime(std::uint64_t q) noexcept;

/// Normalized representatives of the points of PG(2,q) for prime q, in the
/// order (1,y,z) lexicographic, then (0,1,z), then (0,0,1). There are
/// q^2+q+1 of them; lines use the same coordinates.
[[nodiscard]] std::vector<std::array<std::uint32_t, 3>> projective_points(std::uint32_t q);

/// Point-line incidence graph of PG(2,q). Points are vertices 0..N-1 and lines
/// N..2N-1 with N = q^2+q+1, both in projective_points order; point x lies on
/// line y iff x·y = 0 mod q. (q+1)-regular, girth 6.
[[nodiscard]] Graph projective_incidence_graph(std::uint32_t q);

/// Erdős–Rényi polarity graph ER_q on the points of PG(2,q): x ~ y iff
/// x·y = 0 mod q and x != y. The q+1 absolute points (x·x = 0) have degree q,
/// all others degree q+1.
[[nodiscard]] Graph polarity_graph(std::uint32_t q);

inline constexpr int kRandomRegularRestartBudget = 1000;

/// Uniform-ish simple d-regular graph from the pairing model.
///
/// Half-edges are paired one at a time; a pair that would create a loop or a
/// repeated edge is redrawn, and a stuck partial pairing is discarded and the
/// whole sample restarted (at most kRandomRegularRestartBudget times).
/// Deterministic in `seed`.
[[nodiscard]] Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

/// Named fixtures with fixed labelings:
///   petersen                 outer cycle 0..4 (i~i+1), spokes i~i+5,
///                            inner pentagram i+5 ~ (i+2 mod 5)+5
///   heawood                  cycle 0..13 plus chords i~i+5 (mod 14) for even i
///   cycle-k, path-k          vertices 0..k-1 in order
///   complete-k, edgeless-k
///   complete-bipartite-a-b   sides 0..a-1 and a..a+b-1
[[nodiscard]] Graph named_fixture(std::string_view name);

[[nodiscard]] const std::vector<std::string>& fixture_names();

}  // namespace imatch

#endif  // IMATCH_GENERATORS_HPP
