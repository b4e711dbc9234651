#include "lat/reduction.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace lat {

namespace {

// Integral LLL state, 1-indexed as in the textbook presentation.
class IntegralLll {
 public:
  IntegralLll(const GramMatrix& g, Integer num, Integer den)
      : num_(std::move(num)),
        den_(std::move(den)),
        n_(g.rank()),
        b_(g.entries()),
        h_(IntMatrix::identity(g.rank())),
        d_(n_ + 1),
        lam_(n_ + 1, IntVector(n_ + 1)) {}

  ReducedBasis run() {
    if (n_ <= 1) return {make_gram(b_), h_};
    d_[0] = 1;
    d_[1] = gram(1, 1);
    std::size_t k = 2, kmax = 1;
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        kmax_ = kmax;
        for (std::size_t j = 1; j <= k; ++j) {
          Integer u = gram(k, j);
          for (std::size_t i = 1; i < j; ++i)
            u = (d_[i] * u - lam_[k][i] * lam_[j][i]) / d_[i - 1];
          if (j < k)
            lam_[k][j] = u;
          else
            d_[k] = u;
        }
      }
      for (;;) {
        reduce(k, k - 1);
        const Integer& lam = lam_[k][k - 1];
        if (den_ * (d_[k] * d_[k - 2] + lam * lam) < num_ * d_[k - 1] * d_[k - 1]) {
          swap(k);
          k = std::max<std::size_t>(2, k - 1);
          continue;
        }
        for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
        ++k;
        break;
      }
    }
    return {make_gram(b_), h_};
  }

 private:
  Integer& gram(std::size_t i, std::size_t j) { return b_(i - 1, j - 1); }

  void reduce(std::size_t k, std::size_t l) {
    if (2 * magnitude(lam_[k][l]) <= d_[l]) return;
    const Integer q = floor_div(2 * lam_[k][l] + d_[l], 2 * d_[l]);
    for (std::size_t i = 0; i < n_; ++i) h_(i, k - 1) -= q * h_(i, l - 1);
    for (std::size_t j = 0; j < n_; ++j) b_(k - 1, j) -= q * b_(l - 1, j);
    for (std::size_t i = 0; i < n_; ++i) b_(i, k - 1) -= q * b_(i, l - 1);
    lam_[k][l] -= q * d_[l];
    for (std::size_t i = 1; i < l; ++i) lam_[k][i] -= q * lam_[l][i];
  }

  void swap(std::size_t k) {
    for (std::size_t i = 0; i < n_; ++i) std::swap(h_(i, k - 1), h_(i, k - 2));
    for (std::size_t j = 0; j < n_; ++j) std::swap(b_(k - 1, j), b_(k - 2, j));
    for (std::size_t i = 0; i < n_; ++i) std::swap(b_(i, k - 1), b_(i, k - 2));
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
    const Integer lam = lam_[k][k - 1];
    const Integer bb = (d_[k - 2] * d_[k] + lam * lam) / d_[k - 1];
    for (std::size_t i = k + 1; i <= kmax_; ++i) {
      const Integer t = lam_[i][k];
      lam_[i][k] = (d_[k] * lam_[i][k - 1] - lam * t) / d_[k - 1];
      lam_[i][k - 1] = (bb * t + lam * lam_[i][k]) / d_[k];
    }
    d_[k - 1] = bb;
  }

  Integer num_, den_;  // delta = num_ / den_
  std::size_t n_;
  std::size_t kmax_ = 1;
  IntMatrix b_;
  IntMatrix h_;
  IntVector d_;
  std::vector<IntVector> lam_;
};

}  // namespace

ReducedBasis lll_reduce(const GramMatrix& g) { return IntegralLll(g, 3, 4).run(); }

ReducedBasis lll_reduce(const GramMatrix& g, const Rational& delta) {
  if (delta <= Rational(1, 4) || delta >= 1) throw std::invalid_argument("lll_reduce: delta must lie in (1/4, 1)");
  return IntegralLll(g, numerator(delta), denominator(delta)).run();
}

bool is_lll_reduced(const GramMatrix& g, const Rational& delta) {
  const std::size_t n = g.rank();
  RationalMatrix mu(n, n);
  RationalVector bstar(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = Rational(g(i, j));
      for (std::size_t k = 0; k < j; ++k) s -= mu(j, k) * mu(i, k) * bstar[k];
      mu(i, j) = s / bstar[j];
    }
    Rational s = Rational(g(i, i));
    for (std::size_t k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * bstar[k];
    bstar[i] = s;
  }
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (boost::multiprecision::abs(mu(i, j)) > half) return false;
    if (i > 0 && bstar[i] < (delta - mu(i, i - 1) * mu(i, i - 1)) * bstar[i - 1]) return false;
  }
  return true;
}

IntMatrix random_unimodular(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);

  std::vector<std::vector<std::int64_t>> u(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) u[perm[j]][j] = (rng() & 1) ? 1 : -1;
  if (n < 2) return from_rows(u);

  // col_i += c * col_j, kept only while every entry stays within [-3, 3].
  const std::size_t ops = 6 * n;
  for (std::size_t step = 0; step < ops; ++step) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % (n - 1);
    if (j >= i) ++j;
    const std::int64_t c = (rng() & 1) ? 1 : -1;
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r) {
      const std::int64_t v = u[r][i] + c * u[r][j];
      ok = v >= -3 && v <= 3;
    }
    if (!ok) continue;
    for (std::size_t r = 0; r < n; ++r) u[r][i] += c * u[r][j];
  }
  return from_rows(u);
}

GramMatrix randomize_basis(const GramMatrix& g, std::uint64_t seed) {
  return make_gram(congruence(g, random_unimodular(g.rank(), seed)));
}

}  // namespace lat
