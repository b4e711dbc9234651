#ifndef LAT_GRAM_HPP
#define LAT_GRAM_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lat/matrix.hpp"

namespace lat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSymmetric : public Error {
 public:
  NotSymmetric(std::size_t i, std::size_t j);
  std::size_t row, col;
};

class NotPositiveDefinite : public Error {
 public:
  // `minor_size` is the size of the first leading principal minor that is <= 0.
  NotPositiveDefinite(std::size_t minor_size, const Integer& value);
  std::size_t minor_size;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

// Symmetric positive-definite integer matrix: a classically integral lattice
// up to isometry. Rank 0 is allowed and acts as the identity of the direct sum.
class GramMatrix {
 public:
  GramMatrix() = default;  // rank 0

  std::size_t rank() const { return entries_.rows(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const IntMatrix& entries() const { return entries_; }

  // Entries as int64 when every entry fits; used by the enumeration kernels.
  std::optional<std::vector<std::int64_t>> entries_int64() const;

  Integer max_diagonal() const;
  Integer min_diagonal() const;

  friend bool operator==(const GramMatrix& a, const GramMatrix& b) {
    return a.entries_ == b.entries_;
  }

  // Lexicographic order on (rank, entries) for canonical sorting.
  friend bool operator<(const GramMatrix& a, const GramMatrix& b);

 private:
  friend GramMatrix make_gram(const IntMatrix& entries);
  explicit GramMatrix(IntMatrix entries) : entries_(std::move(entries)) {}
  IntMatrix entries_;
};

// Validates symmetry and positive-definiteness (leading principal minors,
// fraction-free). Diagonal entries of a positive-definite integer matrix are
// automatically >= 1.
GramMatrix make_gram(const IntMatrix& entries);
GramMatrix make_gram(std::size_t rank, const std::vector<std::vector<std::int64_t>>& rows);
GramMatrix diagonal_gram(const std::vector<std::int64_t>& diag);

// Determinant (discriminant); strictly positive for valid Grams.
Integer det(const GramMatrix& g);

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b);
GramMatrix direct_sum(const std::vector<GramMatrix>& parts);

// Multiplies every inner product by m >= 1.
GramMatrix scale(const GramMatrix& g, const Integer& m);

// Inverse Gram: the Gram matrix of the dual lattice in the dual basis.
RationalMatrix dual_gram(const GramMatrix& g);

// t^T g t for an n x m integer matrix t (no validity check on the result).
IntMatrix congruence(const GramMatrix& g, const IntMatrix& t);

// Gram text format: first line the rank, then one line per row of
// space-separated decimal integers. Lines whose first non-blank character is
// '#' are ignored on input.
std::string to_text(const GramMatrix& g);
GramMatrix parse_gram_text(const std::string& text);
GramMatrix read_gram_file(const std::string& path);

std::ostream& operator<<(std::ostream& os, const GramMatrix& g);

}  // namespace lat

#endif  // LAT_GRAM_HPP
