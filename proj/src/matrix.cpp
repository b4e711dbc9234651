#include "lat/matrix.hpp"

#include <ostream>
#include <tuple>
#include <utility>

namespace lat {

namespace {

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
std::tuple<Integer, Integer, Integer> xgcd(Integer a, Integer b) {
  Integer s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Integer q = floor_div(a, b);
    Integer r = a - q * b;
    a = std::move(b);
    b = std::move(r);
    Integer s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Integer t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a < 0) return {-a, -s0, -t0};
  return {a, s0, t0};
}

}  // namespace

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix from_columns(std::size_t dim, const std::vector<std::vector<std::int64_t>>& cols) {
  IntMatrix m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim) throw std::invalid_argument("from_columns: wrong length");
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::optional<IntMatrix> to_integer(const RationalMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) return std::nullopt;
      r(i, j) = boost::multiprecision::numerator(m(i, j));
    }
  return r;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    }
    const Rational pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RationalMatrix inverse(const IntMatrix& m) { return inverse(to_rational(m)); }

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  RationalMatrix m = a;
  RationalVector x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      std::swap(x[k], x[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
      x[i] -= f * x[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = k + 1; j < n; ++j) x[k] -= m(k, j) * x[j];
    x[k] /= m(k, k);
  }
  return x;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  auto inv = to_integer(inverse(m));
  if (!inv) throw std::domain_error("unimodular_inverse: matrix is not unimodular");
  return *inv;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  IntMatrix a = m;
  IntMatrix v = IntMatrix::identity(n);

  auto combine = [&](IntMatrix& x, std::size_t p, std::size_t c, const Integer& s,
                     const Integer& t, const Integer& u, const Integer& w) {
    // col p <- s*col p + t*col c ; col c <- u*col p + w*col c
    for (std::size_t i = 0; i < x.rows(); ++i) {
      Integer xp = x(i, p), xc = x(i, c);
      x(i, p) = s * xp + t * xc;
      x(i, c) = u * xp + w * xc;
    }
  };

  std::size_t p = 0;
  for (std::size_t r = 0; r < rows && p < n; ++r) {
    for (std::size_t c = p + 1; c < n; ++c) {
      if (a(r, c) == 0) continue;
      const Integer x = a(r, p), y = a(r, c);
      auto [g, s, t] = xgcd(x, y);
      const Integer u = -y / g, w = x / g;
      combine(a, p, c, s, t, u, w);
      combine(v, p, c, s, t, u, w);
    }
    if (a(r, p) != 0) ++p;
  }

  IntMatrix k(n, n - p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = p; j < n; ++j) k(i, j - p) = v(i, j);
  return k;
}

LatticeSpan::LatticeSpan(std::size_t dim) : dim_(dim), rows_(dim) {
  everything_ = (dim == 0);
}

void LatticeSpan::insert(std::span<const std::int64_t> v) {
  if (everything_) return;
  insert_owned(IntVector(v.begin(), v.end()));
}

void LatticeSpan::insert(std::span<const Integer> v) {
  if (everything_) return;
  insert_owned(IntVector(v.begin(), v.end()));
}

void LatticeSpan::insert_owned(IntVector v) {
  if (v.size() != dim_) throw std::invalid_argument("LatticeSpan: wrong dimension");
  bool changed = false;
  for (std::size_t p = 0; p < dim_; ++p) {
    if (v[p] == 0) continue;
    IntVector& row = rows_[p];
    if (row.empty()) {
      if (v[p] < 0)
        for (auto& e : v) e = -e;
      row = std::move(v);
      ++rank_;
      changed = true;
      break;
    }
    if (magnitude(v[p]) % row[p] == 0) {
      // Leading entry already divisible: plain subtraction, pivot unchanged.
      const Integer q = v[p] / row[p];
      for (std::size_t j = p; j < dim_; ++j) v[j] -= q * row[j];
      continue;
    }
    const Integer a = row[p], b = v[p];
    auto [g, s, t] = xgcd(a, b);
    const Integer u = -b / g, w = a / g;
    for (std::size_t j = p; j < dim_; ++j) {
      Integer rj = row[j], vj = v[j];
      row[j] = s * rj + t * vj;
      v[j] = u * rj + w * vj;
    }
    changed = true;
  }
  if (!changed) return;
  // Keep entries right of each pivot reduced modulo later pivots.
  for (std::size_t p = dim_; p-- > 0;) {
    if (rows_[p].empty()) continue;
    for (std::size_t q = p + 1; q < dim_; ++q) {
      if (rows_[q].empty()) continue;
      const Integer f = floor_div(rows_[p][q], rows_[q][q]);
      if (f == 0) continue;
      for (std::size_t j = q; j < dim_; ++j) rows_[p][j] -= f * rows_[q][j];
    }
  }
  everything_ = (rank_ == dim_ && index() == 1);
}

Integer LatticeSpan::index() const {
  Integer idx = 1;
  for (const auto& row : rows_)
    if (!row.empty()) idx *= row[&row - rows_.data()];
  return idx;
}

IntMatrix LatticeSpan::basis() const {
  IntMatrix b(dim_, rank_);
  std::size_t c = 0;
  for (const auto& row : rows_) {
    if (row.empty()) continue;
    for (std::size_t i = 0; i < dim_; ++i) b(i, c) = row[i];
    ++c;
  }
  return b;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
    os << '\n';
  }
  return os;
}

}  // namespace lat
