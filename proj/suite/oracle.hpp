#ifndef LAT_SUITE_ORACLE_HPP
#define LAT_SUITE_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "lat/gram.hpp"

// Brute-force reference implementations. Nothing here calls the reduction,
// enumeration or embedding engines.
namespace lat::oracle {

struct BoxVector {
  std::int64_t norm;
  std::vector<std::int64_t> coords;
  auto operator<=>(const BoxVector&) const = default;
};

// Scans the box |x_i| <= sqrt(bound * adj_ii / det) in the given basis.
// First nonzero coordinate positive; sorted by (norm, coords).
std::vector<BoxVector> short_vectors(const GramMatrix& g, std::int64_t bound);

// Tries every assignment of basis images among vectors of the right norms.
bool represents(const GramMatrix& q, const GramMatrix& l);

bool isometric(const GramMatrix& a, const GramMatrix& b);

// Minimum of x^T adj(g) x over nonzero x, divided by det(g).
Rational min_dual_norm(const GramMatrix& g);

// Vectors of the given norm in Z^8 u (Z + 1/2)^8 with even coordinate sum.
std::int64_t e8_coordinate_count(std::int64_t norm);

// Weight distribution of the span of the given 24-bit code words.
std::vector<std::int64_t> code_weights(const std::vector<std::uint32_t>& generators);

// Minimal vectors of the Leech lattice counted from the extended Golay
// code: octad shapes, (-3, 1^23) shapes and (4, 4, 0^22) shapes.
std::int64_t leech_min_count(const std::vector<std::uint32_t>& golay_generators);

}  // namespace lat::oracle

#endif  // LAT_SUITE_ORACLE_HPP
