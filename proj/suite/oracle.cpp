#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace lat::oracle {

namespace {

using i128 = __int128;

Integer laplace_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][c] * laplace_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

std::vector<std::vector<Integer>> rows_of(const GramMatrix& g) {
  std::vector<std::vector<Integer>> m(g.rank(), std::vector<Integer>(g.rank()));
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j) m[i][j] = g(i, j);
  return m;
}

// Diagonal cofactor: determinant with row and column i removed.
Integer diagonal_cofactor(const std::vector<std::vector<Integer>>& m, std::size_t i) {
  std::vector<std::vector<Integer>> minor;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r == i) continue;
    std::vector<Integer> row;
    for (std::size_t c = 0; c < m.size(); ++c)
      if (c != i) row.push_back(m[r][c]);
    minor.push_back(std::move(row));
  }
  return laplace_det(minor);
}

// Visits every integer vector in the box with the norm it has under m.
void scan_box(const std::vector<std::vector<Integer>>& m, const std::vector<std::int64_t>& radius,
              const std::function<void(const std::vector<std::int64_t>&, const Integer&)>& visit) {
  const std::size_t n = m.size();
  std::vector<std::int64_t> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -radius[i];
  for (;;) {
    Integer norm = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += m[i][j] * x[i] * x[j];
    visit(x, norm);
    std::size_t k = 0;
    while (k < n && x[k] == radius[k]) {
      x[k] = -radius[k];
      ++k;
    }
    if (k == n) return;
    ++x[k];
  }
}

std::vector<std::int64_t> box_radius(const std::vector<std::vector<Integer>>& m, const Integer& bound) {
  const Integer d = laplace_det(m);
  std::vector<std::int64_t> radius(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Integer cap = bound * diagonal_cofactor(m, i);
    std::int64_t r = 0;
    while (Integer(r + 1) * (r + 1) * d <= cap) ++r;
    radius[i] = r;
  }
  return radius;
}

bool canonical(const std::vector<std::int64_t>& x) {
  for (std::int64_t v : x)
    if (v != 0) return v > 0;
  return false;
}

}  // namespace

std::vector<BoxVector> short_vectors(const GramMatrix& g, std::int64_t bound) {
  std::vector<BoxVector> out;
  if (g.rank() == 0 || bound < 1) return out;
  const auto m = rows_of(g);
  scan_box(m, box_radius(m, bound), [&](const std::vector<std::int64_t>& x, const Integer& norm) {
    if (norm <= bound && canonical(x)) out.push_back({static_cast<std::int64_t>(norm), x});
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool represents(const GramMatrix& q, const GramMatrix& l) {
  const std::size_t n = q.rank(), k = l.rank();
  if (k == 0) return true;
  if (k > n) return false;
  std::int64_t top = 0;
  for (std::size_t i = 0; i < k; ++i) top = std::max(top, static_cast<std::int64_t>(l(i, i)));
  std::vector<std::vector<std::int64_t>> pool;
  std::vector<std::int64_t> norms;
  for (const BoxVector& v : short_vectors(q, top)) {
    std::vector<std::int64_t> neg = v.coords;
    for (auto& c : neg) c = -c;
    pool.push_back(v.coords);
    pool.push_back(std::move(neg));
    norms.push_back(v.norm);
    norms.push_back(v.norm);
  }
  auto ip = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += q(i, j) * a[i] * b[j];
    return s;
  };
  std::vector<std::size_t> chosen(k);
  std::function<bool(std::size_t)> fill = [&](std::size_t col) {
    if (col == k) return true;
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if (norms[c] != l(col, col)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < col && ok; ++j) ok = ip(pool[chosen[j]], pool[c]) == l(j, col);
      if (!ok) continue;
      chosen[col] = c;
      if (fill(col + 1)) return true;
    }
    return false;
  };
  return fill(0);
}

bool isometric(const GramMatrix& a, const GramMatrix& b) {
  if (a.rank() != b.rank() || laplace_det(rows_of(a)) != laplace_det(rows_of(b))) return false;
  return represents(a, b);
}

Rational min_dual_norm(const GramMatrix& g) {
  const std::size_t n = g.rank();
  const auto m = rows_of(g);
  const Integer d = laplace_det(m);
  // adj(g)_ij = (-1)^(i+j) det(g without row j, column i); g is symmetric.
  std::vector<std::vector<Integer>> adj(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Integer>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Integer> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      const Integer c = laplace_det(minor);
      adj[i][j] = ((i + j) % 2 == 0) ? c : Integer(-c);
    }
  }
  Integer bound = adj[0][0];
  for (std::size_t i = 1; i < n; ++i) bound = std::min(bound, adj[i][i]);
  Integer best = bound;
  scan_box(adj, box_radius(adj, bound), [&](const std::vector<std::int64_t>& x, const Integer& norm) {
    if (norm > 0 && norm < best) best = norm;
    (void)x;
  });
  return Rational(best, d);
}

std::int64_t e8_coordinate_count(std::int64_t norm) {
  std::int64_t count = 0;
  // Integer points: |x_i| <= sqrt(norm); doubled half-integer points y = 2x are odd.
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= norm) ++r;
  std::vector<std::int64_t> x(8, -r);
  for (;;) {
    std::int64_t sum = 0, sq = 0;
    for (auto v : x) {
      sum += v;
      sq += v * v;
    }
    if (sq == norm && sum % 2 == 0) ++count;
    std::size_t k = 0;
    while (k < 8 && x[k] == r) x[k++] = -r;
    if (k == 8) break;
    ++x[k];
  }
  std::int64_t h = 1;
  while ((h + 2) * (h + 2) <= 4 * norm) h += 2;
  std::vector<std::int64_t> y(8, -h);
  for (;;) {
    std::int64_t sum = 0, sq = 0;
    for (auto v : y) {
      sum += v;
      sq += v * v;
    }
    if (sq == 4 * norm && sum % 4 == 0) ++count;
    std::size_t k = 0;
    while (k < 8 && y[k] == h) y[k++] = -h;
    if (k == 8) break;
    y[k] += 2;
  }
  return count;
}

std::vector<std::int64_t> code_weights(const std::vector<std::uint32_t>& generators) {
  std::vector<std::int64_t> weights(25, 0);
  const std::size_t k = generators.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::uint32_t word = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) word ^= generators[i];
    ++weights[static_cast<std::size_t>(std::popcount(word & 0xFFFFFFu))];
  }
  return weights;
}

std::int64_t leech_min_count(const std::vector<std::uint32_t>& golay_generators) {
  const auto weights = code_weights(golay_generators);
  std::int64_t words = 0;
  for (auto w : weights) words += w;
  // (+-2^8): even number of minus signs on an octad; (-+3, +-1^23): signs
  // flipped on a code word; (+-4, +-4): any two positions, any signs.
  return weights[8] * 128 + 24 * words + 276 * 4;
}

}  // namespace lat::oracle
