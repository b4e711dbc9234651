#ifndef LAT_EMBEDDING_HPP
#define LAT_EMBEDDING_HPP

#include <optional>
#include <vector>

#include "lat/gram.hpp"

namespace lat {

class NotUnimodular : public Error {
 public:
  NotUnimodular() : Error("sublattice is not unimodular") {}
};

// Certificate that `target` represents `source`: map^T G_target map = G_source.
// Columns of `map` are the images of the source basis in target coordinates.
struct Embedding {
  GramMatrix source;
  GramMatrix target;
  IntMatrix map;

  // Re-checks the certificate exactly.
  bool verify() const;
};

// Builds an Embedding after checking the certificate; throws std::logic_error
// if it does not verify.
Embedding make_embedding(GramMatrix source, GramMatrix target, IntMatrix map);

// Complete backtracking search for an injective form-preserving map L -> Q.
std::optional<Embedding> represents(const GramMatrix& q, const GramMatrix& l);

// An isometry g1 -> g2, or nothing.
std::optional<Embedding> is_isometric(const GramMatrix& g1, const GramMatrix& g2);

// The sublattice of q orthogonal to the image of e, as an embedding into q
// (its source is the LLL-reduced complement Gram).
Embedding orthogonal_complement(const GramMatrix& q, const Embedding& e);

struct SummandSplit {
  GramMatrix complement;
  // Isometry from direct_sum(e.source, complement) onto q.
  Embedding certificate;
};

// Splits off a unimodular sublattice: q = L (+) complement.
SummandSplit unimodular_summand_split(const GramMatrix& q, const Embedding& e);

// Composition: (L1 -> Q) after (L2 -> L1) gives L2 -> Q.
Embedding compose(const Embedding& outer, const Embedding& inner);

// Block-diagonal embedding of direct sums.
Embedding direct_sum(const std::vector<Embedding>& parts);

}  // namespace lat

#endif  // LAT_EMBEDDING_HPP
