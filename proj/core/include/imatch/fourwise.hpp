#ifndef IMATCH_FOURWISE_HPP
#define IMATCH_FOURWISE_HPP

#include <array>
#include <cstdint>

#include "imatch/graph.hpp"

namespace imatch {

/// Arithmetic in GF(2^k), 1 <= k <= 32, elements stored as bit vectors of
/// polynomial coefficients. The modulus is the numerically smallest
/// irreducible polynomial of degree k.
class BinaryField {
 public:
  explicit BinaryField(unsigned k);

  [[nodiscard]] unsigned bits() const noexcept { return k_; }
  [[nodiscard]] std::uint64_t order() const noexcept { return std::uint64_t{1} << k_; }
  /// Modulus including the x^k term.
  [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }

  [[nodiscard]] static std::uint32_t add(std::uint32_t a, std::uint32_t b) noexcept { return a ^ b; }
  [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;

 private:
  unsigned k_;
  std::uint64_t modulus_;
};

/// Rabin irreducibility test for a GF(2) polynomial of degree 1..32.
[[nodiscard]] bool is_irreducible_gf2(std::uint64_t poly);

/// Smallest irreducible GF(2) polynomial of degree k (1 <= k <= 32).
[[nodiscard]] std::uint64_t smallest_irreducible_gf2(unsigned k);

/// Degree-3 polynomial hash h(x) = c0 + c1 x + c2 x^2 + c3 x^3 over GF(2^k).
///
/// For coefficients drawn uniformly from the field, the values h(x) at any
/// four distinct points are independent and uniform, so the indicators
/// [h(v) < t] for vertex labels v are 4-wise independent with probability
/// t / 2^k each.
class FourWiseSampler {
 public:
  FourWiseSampler(unsigned k, std::array<std::uint32_t, 4> coeffs);

  /// Smallest field with at least n elements (k >= 1).
  [[nodiscard]] static unsigned bits_for(std::size_t n);

  [[nodiscard]] const BinaryField& field() const noexcept { return field_; }
  [[nodiscard]] const std::array<std::uint32_t, 4>& coefficients() const noexcept { return coeffs_; }

  [[nodiscard]] std::uint32_t hash(std::uint32_t x) const noexcept;

  /// floor(p * 2^k), clamped to [0, 2^k].
  [[nodiscard]] std::uint64_t threshold(double p) const noexcept;

  [[nodiscard]] bool includes(std::uint32_t label, std::uint64_t threshold) const noexcept {
    return hash(label) < threshold;
  }

 private:
  BinaryField field_;
  std::array<std::uint32_t, 4> coeffs_;
};

/// Vertices v with h(v) < floor(p * 2^k). Throws std::invalid_argument if the
/// field has fewer than n elements.
[[nodiscard]] VertexSet fourwise_sample(const Graph& g, double p, const FourWiseSampler& sampler);

}  // namespace imatch

#endif  // IMATCH_FOURWISE_HPP
