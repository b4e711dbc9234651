#ifndef LAT_DECOMPOSITION_HPP
#define LAT_DECOMPOSITION_HPP

#include <vector>

#include "lat/embedding.hpp"

namespace lat {

// Orthogonal decomposition into indecomposable summands. Summands are
// LLL-reduced and sorted by (rank, det, Gram entries); embeddings[i] maps
// summands[i] into the decomposed lattice.
struct Decomposition {
  std::vector<GramMatrix> summands;
  std::vector<Embedding> embeddings;
};

Decomposition indecomposable_summands(const GramMatrix& g);

bool is_indecomposable(const GramMatrix& g);

// No indecomposable summand of g1 is isometric to one of g2.
bool coprime(const GramMatrix& g1, const GramMatrix& g2);

// Multiset equality of summands up to isometry. LLL output is not a
// canonical form, so summands of re-based inputs are matched by isometry.
bool same_summands(const Decomposition& a, const Decomposition& b);

}  // namespace lat

#endif  // LAT_DECOMPOSITION_HPP
