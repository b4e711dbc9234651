#ifndef LAT_ENUMERATION_HPP
#define LAT_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lat/gram.hpp"

namespace lat {

class SingularSublattice : public Error {
 public:
  SingularSublattice() : Error("sublattice basis is linearly dependent") {}
};

struct ShortVector {
  std::vector<std::int64_t> coords;
  std::int64_t norm = 0;

  friend bool operator==(const ShortVector&, const ShortVector&) = default;
};

// One representative per +-pair (first nonzero coordinate positive), sorted
// by (norm, coordinates).
struct ShortVectorList {
  Rational bound;
  std::vector<ShortVector> vectors;
};

// Visits every nonzero v with v^T g v <= bound exactly once per +-pair, in
// no particular order and with no particular sign. Coordinates are in the
// basis of g.
void for_each_short_vector(const GramMatrix& g, const Integer& bound,
                           const std::function<void(std::span<const std::int64_t>, std::int64_t)>& visit);

ShortVectorList short_vectors(const GramMatrix& g, const Rational& bound);

// Number of lattice vectors (both signs) of each norm 0..max_norm; entry 0 is 1.
std::vector<std::int64_t> norm_counts(const GramMatrix& g, std::int64_t max_norm);

Integer min_norm(const GramMatrix& g);

// Minimum of w^T g^{-1} w over nonzero integer w, found by enumerating the
// integral lattice det(g) * g^{-1}.
Rational min_dual_norm(const GramMatrix& g);

// The integral Gram det(g) * g^{-1} (the adjugate).
GramMatrix scaled_dual(const GramMatrix& g);

// True iff the vectors of norm <= bound generate the whole lattice over Z.
bool generated_by_norms_up_to(const GramMatrix& g, const Integer& bound);

struct Projection {
  RationalVector coords;  // pi(v) in the basis of the sublattice
  Rational norm;
  bool in_dual = false;   // all (pi(v), w) integral for basis vectors w
};

// Orthogonal projection of v (coordinates in q's basis) onto the rational
// span of the columns of `basis`.
Projection project_onto_sublattice(const GramMatrix& q, const IntMatrix& basis,
                                   std::span<const Integer> v);

// Exact inner product u^T g w.
Integer inner(const GramMatrix& g, std::span<const std::int64_t> u, std::span<const std::int64_t> w);
Integer inner(const GramMatrix& g, std::span<const Integer> u, std::span<const Integer> w);

}  // namespace lat

#endif  // LAT_ENUMERATION_HPP
