#ifndef LAT_REDUCTION_HPP
#define LAT_REDUCTION_HPP

#include <cstdint>

#include "lat/gram.hpp"

namespace lat {

struct ReducedBasis {
  GramMatrix gram;     // transform^T * original * transform
  IntMatrix transform;  // columns: new basis in old coordinates, det +-1
};

// LLL with delta = 3/4, run directly on the Gram matrix in integer
// arithmetic (Cohen's integral variant; no Gram-Schmidt rationals are formed).
ReducedBasis lll_reduce(const GramMatrix& g);
// Same with 1/4 < delta < 1.
ReducedBasis lll_reduce(const GramMatrix& g, const Rational& delta);

// True iff g is size-reduced (|mu_ij| <= 1/2) and satisfies the Lovasz
// condition at delta, checked independently with rational Gram-Schmidt.
bool is_lll_reduced(const GramMatrix& g, const Rational& delta = Rational(3, 4));

// U^T g U for a pseudo-random unimodular U (entries in [-3, 3]),
// deterministic in `seed`.
GramMatrix randomize_basis(const GramMatrix& g, std::uint64_t seed);

// The unimodular matrix used by randomize_basis.
IntMatrix random_unimodular(std::size_t n, std::uint64_t seed);

}  // namespace lat

#endif  // LAT_REDUCTION_HPP
