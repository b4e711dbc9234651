#ifndef LAT_TESTS_TEST_UTIL_HPP
#define LAT_TESTS_TEST_UTIL_HPP

#include <random>

#include "lat/gram.hpp"

namespace lat::test {

// B^T D B for a random nonsingular B with small entries and positive diagonal D.
inline GramMatrix random_gram(std::mt19937_64& rng, std::size_t n, int spread = 1, int max_weight = 3) {
  std::uniform_int_distribution<int> entry(-spread, spread);
  std::uniform_int_distribution<int> weight(1, max_weight);
  for (;;) {
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = entry(rng);
    if (determinant(b) == 0) continue;
    IntMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = weight(rng);
    return make_gram(b.transpose() * d * b);
  }
}

// Random positive definite Gram with |entries| <= max_entry, by rejection.
inline GramMatrix random_small_gram(std::mt19937_64& rng, std::size_t n, int max_entry) {
  std::uniform_int_distribution<int> diag(1, max_entry);
  std::uniform_int_distribution<int> off(-max_entry, max_entry);
  for (;;) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = diag(rng);
      for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i) = off(rng);
    }
    try {
      return make_gram(m);
    } catch (const NotPositiveDefinite&) {
    }
  }
}

}  // namespace lat::test

#endif  // LAT_TESTS_TEST_UTIL_HPP
