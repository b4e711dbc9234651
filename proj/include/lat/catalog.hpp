#ifndef LAT_CATALOG_HPP
#define LAT_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lat/gram.hpp"

namespace lat {

class UnknownName : public Error {
 public:
  explicit UnknownName(const std::string& name) : Error("unknown lattice name '" + name + "'") {}
};

// Named lattices:
//   Zn(k)      the integer lattice Z^k
//   An(k)      root lattice A_k (Cartan matrix)
//   Dn(k)      root lattice D_k = {x in Z^k : sum x even}; Dn(1) = <4>
//   DnPlus(k)  D_k plus the glue vector (1/2, ..., 1/2); k = 4, 8, 12, ...
//   E6, E7, E8 root lattices (Cartan matrices)
//   Leech      built from the extended binary Golay code, LLL-reduced
//   Lambda23   orthogonal complement in Leech of one minimal vector, LLL-reduced
GramMatrix catalog(std::string_view name, std::optional<std::int64_t> arg = std::nullopt);

// Accepts "E8", "Zn(3)", ... in one string.
GramMatrix catalog_by_name(std::string_view full_name);

// Whether `name` takes an integer argument (Zn, An, Dn, DnPlus).
bool catalog_takes_argument(std::string_view name);
bool catalog_has(std::string_view name);

// Twelve generator words (bit i = coordinate i) of the extended binary Golay
// code of length 24.
std::vector<std::uint32_t> golay_generators();

// Gram matrix of the Z-span of integer row vectors, with inner products
// divided by `denominator` (which must divide all of them).
GramMatrix gram_from_generators(const std::vector<std::vector<std::int64_t>>& generators,
                                std::int64_t denominator);

}  // namespace lat

#endif  // LAT_CATALOG_HPP
