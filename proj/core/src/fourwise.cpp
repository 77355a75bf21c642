#include "imatch/fourwise.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace imatch {

namespace {

int degree_of(std::uint64_t poly) { return poly == 0 ? -1 : 63 - std::countl_zero(poly); }

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree_of(m);
  for (int da = degree_of(a); da >= dm; da = degree_of(a)) a ^= m << (da - dm);
  return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// x^(2^e) mod f by repeated squaring.
std::uint64_t frobenius_x(unsigned e, std::uint64_t f) {
  std::uint64_t r = poly_mod(2, f);
  for (unsigned i = 0; i < e; ++i) r = poly_mod(clmul(r, r), f);
  return r;
}

}  // namespace

bool is_irreducible_gf2(std::uint64_t poly) {
  const int k = degree_of(poly);
  if (k < 1 || k > 32) throw std::invalid_argument("degree must be in [1, 32]");
  if (k == 1) return true;
  if ((poly & 1U) == 0) return false;
  if (frobenius_x(static_cast<unsigned>(k), poly) != 2) return false;
  int rest = k;
  for (int r = 2; r <= rest; ++r) {
    if (rest % r != 0) continue;
    while (rest % r == 0) rest /= r;
    const std::uint64_t h = frobenius_x(static_cast<unsigned>(k / r), poly) ^ 2;
    if (poly_gcd(poly, h) != 1) return false;
  }
  return true;
}

std::uint64_t smallest_irreducible_gf2(unsigned k) {
  if (k < 1 || k > 32) throw std::invalid_argument("field degree must be in [1, 32]");
  const std::uint64_t top = std::uint64_t{1} << k;
  for (std::uint64_t low = 0; low < top; ++low) {
    if (is_irreducible_gf2(top | low)) return top | low;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

namespace {

std::uint64_t cached_modulus(unsigned k) {
  static const std::array<std::uint64_t, 33> table = [] {
    std::array<std::uint64_t, 33> t{};
    for (unsigned i = 1; i <= 32; ++i) t[i] = smallest_irreducible_gf2(i);
    return t;
  }();
  if (k < 1 || k > 32) throw std::invalid_argument("field degree must be in [1, 32]");
  return table[k];
}

}  // namespace

BinaryField::BinaryField(unsigned k) : k_(k), modulus_(cached_modulus(k)) {}

std::uint32_t BinaryField::mul(std::uint32_t a, std::uint32_t b) const noexcept {
  return static_cast<std::uint32_t>(poly_mod(clmul(a, b), modulus_));
}

FourWiseSampler::FourWiseSampler(unsigned k, std::array<std::uint32_t, 4> coeffs)
    : field_(k), coeffs_(coeffs) {
  for (auto c : coeffs_) {
    if (c >= field_.order()) throw std::invalid_argument("coefficient outside GF(2^k)");
  }
}

unsigned FourWiseSampler::bits_for(std::size_t n) {
  unsigned k = 1;
  while ((std::uint64_t{1} << k) < n) ++k;
  if (k > 32) throw std::invalid_argument("graph too large for a 32-bit field");
  return k;
}

std::uint32_t FourWiseSampler::hash(std::uint32_t x) const noexcept {
  // Horner: ((c3 x + c2) x + c1) x + c0
  std::uint32_t h = coeffs_[3];
  h = BinaryField::add(field_.mul(h, x), coeffs_[2]);
  h = BinaryField::add(field_.mul(h, x), coeffs_[1]);
  h = BinaryField::add(field_.mul(h, x), coeffs_[0]);
  return h;
}

std::uint64_t FourWiseSampler::threshold(double p) const noexcept {
  if (!(p > 0.0)) return 0;
  if (p >= 1.0) return field_.order();
  return static_cast<std::uint64_t>(std::floor(p * static_cast<double>(field_.order())));
}

VertexSet fourwise_sample(const Graph& g, double p, const FourWiseSampler& sampler) {
  if (sampler.field().order() < g.num_vertices()) {
    throw std::invalid_argument("field order " + std::to_string(sampler.field().order()) +
                                " is smaller than vertex count " + std::to_string(g.num_vertices()));
  }
  const std::uint64_t t = sampler.threshold(p);
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (sampler.includes(v, t)) out.push_back(v);
  }
  return out;
}

}  // namespace imatch
