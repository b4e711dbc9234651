#include "lat/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lat/reduction.hpp"

namespace lat {

namespace {

using i128 = __int128;

// Integer helpers shared by the two kernel instantiations.
i128 kfloor_div(i128 a, i128 b) {
  i128 q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}
i128 kceil_div(i128 a, i128 b) { return -kfloor_div(-a, b); }
i128 kisqrt(i128 a) {
  if (a < 2) return a;
  // The long double estimate is within a few units; fix it up exactly.
  i128 x = static_cast<i128>(std::sqrt(static_cast<long double>(a)));
  while (x * x > a) --x;
  while ((x + 1) * (x + 1) <= a) ++x;
  return x;
}
Integer kfloor_div(const Integer& a, const Integer& b) { return floor_div(a, b); }
Integer kceil_div(const Integer& a, const Integer& b) { return ceil_div(a, b); }
Integer kisqrt(const Integer& a) { return isqrt(a); }

std::int64_t to_coord(i128 v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("enumeration: coordinate exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}
std::int64_t to_coord(const Integer& v) { return checked_int64(v, "enumeration"); }

// Fincke-Pohst over the integer Schur complements of g. With d_i the i-th
// leading principal minor and R the Bareiss rows, the partial norm of the
// tail (x_i..x_{n-1}) is N_i / d_i where
//   N_i = d_{i+1} x_i^2 + 2 b_i x_i + c_i,   b_i = sum_{j>i} R[i][j] x_j,
//   c_i = (b_i^2 + d_i N_{i+1}) / d_{i+1}     (exact),
// and the admissible x_i satisfy d_{i+1} x_i = -b_i +- sqrt(disc) with
//   disc = d_i (d_{i+1} B - N_{i+1}).
// Everything is an integer; pruning compares N_i <= B d_i exactly.
template <typename Int>
class FinckePohst {
 public:
  FinckePohst(std::size_t n, std::vector<Int> r, std::vector<Int> d, Int bound)
      : n_(n), r_(std::move(r)), d_(std::move(d)), bound_(bound), x_(n), big_n_(n + 1) {}

  // on_vector(x, norm, bound) may lower `bound` to shrink the search.
  template <typename F>
  void run(F&& on_vector) {
    if (n_ == 0 || bound_ < 1) return;
    big_n_[n_] = 0;
    descend(n_ - 1, true, on_vector);
  }

 private:
  template <typename F>
  void descend(std::size_t i, bool tail_zero, F& on_vector) {
    Int b = 0;
    for (std::size_t j = i + 1; j < n_; ++j)
      if (x_[j] != 0) b += r_[i * n_ + j] * x_[j];
    const Int& a = d_[i + 1];
    const Int disc = d_[i] * (a * bound_ - big_n_[i + 1]);
    if (disc < 0) return;
    const Int c = (b * b + d_[i] * big_n_[i + 1]) / a;
    const Int s = kisqrt(disc);
    Int lo = kceil_div(-b - s, a);
    const Int hi = kfloor_div(-b + s, a);
    if (tail_zero) {
      const Int floor_lo = (i == 0) ? Int(1) : Int(0);
      if (lo < floor_lo) lo = floor_lo;
    }
    for (Int xi = lo; xi <= hi; ++xi) {
      const Int ni = a * xi * xi + 2 * b * xi + c;
      if (ni > bound_ * d_[i]) continue;
      x_[i] = xi;
      big_n_[i] = ni;
      if (i == 0)
        on_vector(x_, ni, bound_);
      else
        descend(i - 1, tail_zero && xi == 0, on_vector);
    }
    x_[i] = 0;
  }

  std::size_t n_;
  std::vector<Int> r_;
  std::vector<Int> d_;
  Int bound_;
  std::vector<Int> x_;
  std::vector<Int> big_n_;
};

struct Schur {
  std::vector<Integer> r;  // n*n, row i valid for columns >= i
  std::vector<Integer> d;  // n+1 leading minors
};

Schur bareiss_rows(const GramMatrix& g) {
  const std::size_t n = g.rank();
  Schur s{std::vector<Integer>(n * n), std::vector<Integer>(n + 1)};
  IntMatrix a = g.entries();
  s.d[0] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = k; j < n; ++j) s.r[k * n + j] = a(k, j);
    s.d[k + 1] = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / s.d[k];
  }
  return s;
}

// Whether every intermediate of the kernel provably stays below 2^122.
bool fits_int128(const GramMatrix& g, const Schur& s, const Integer& bound) {
  const std::size_t n = g.rank();
  Integer dmax = 0, rmax = 0, prod = 1;
  for (const auto& v : s.d) dmax = std::max(dmax, magnitude(v));
  for (const auto& v : s.r) rmax = std::max(rmax, magnitude(v));
  for (std::size_t i = 0; i < n; ++i) prod *= g(i, i);
  // Hadamard: (g^{-1})_jj <= prod_{k != j} g_kk / det(g).
  const Integer x2 = ceil_div(bound * prod, g.min_diagonal() * s.d[n]);
  const Integer xmax = isqrt(x2) + 1;
  const Integer bm = Integer(n) * rmax * xmax;
  const Integer limit = Integer(1) << 122;
  return bm * bm < limit && dmax * dmax * (bound + 1) < limit && dmax * xmax * xmax < limit &&
         2 * bm * xmax < limit;
}

template <typename Int, typename F>
void run_kernel(const Schur& s, std::size_t n, const Integer& bound, F&& on_vector) {
  std::vector<Int> r(s.r.size()), d(s.d.size());
  if constexpr (std::is_same_v<Int, Integer>) {
    r = s.r;
    d = s.d;
    FinckePohst<Int>(n, std::move(r), std::move(d), bound).run(on_vector);
  } else {
    // cpp_int -> __int128 via two 64-bit halves.
    auto conv = [](const Integer& v) {
      const Integer mag = magnitude(v);
      const Integer mask = (Integer(1) << 64) - 1;
      const unsigned long long lo = static_cast<unsigned long long>(mag & mask);
      const unsigned long long hi = static_cast<unsigned long long>(mag >> 64);
      i128 out = (static_cast<i128>(hi) << 64) | static_cast<i128>(lo);
      return v < 0 ? -out : out;
    };
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = conv(s.r[i]);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = conv(s.d[i]);
    FinckePohst<Int>(n, std::move(r), std::move(d), conv(bound)).run(on_vector);
  }
}

// Pairwise size-reduction test used to decide whether to LLL first.
bool looks_reduced(const GramMatrix& g) {
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = i + 1; j < g.rank(); ++j)
      if (2 * magnitude(g(i, j)) > std::min(g(i, i), g(j, j))) return false;
  return true;
}

// Runs the kernel on g (or on an LLL-reduced copy) and hands visit() the
// coordinates in g's own basis. visit may lower the bound.
template <typename Visit>
void enumerate(const GramMatrix& g, const Integer& bound, Visit&& visit) {
  const std::size_t n = g.rank();
  if (n == 0 || bound < 1) return;

  std::optional<ReducedBasis> red;
  if (n > 2 && !looks_reduced(g)) red = lll_reduce(g, Rational(99, 100));
  const GramMatrix& work = red ? red->gram : g;

  std::vector<std::vector<std::int64_t>> u;
  if (red) {
    u.assign(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) u[i][j] = checked_int64(red->transform(i, j), "transform");
  }

  std::vector<std::int64_t> coords(n), mapped(n);
  auto emit = [&](const auto& x, const auto& norm, auto& kbound) {
    for (std::size_t i = 0; i < n; ++i) coords[i] = to_coord(x[i]);
    const std::int64_t nv = to_coord(norm);
    std::int64_t new_bound = std::numeric_limits<std::int64_t>::max();
    if (red) {
      for (std::size_t i = 0; i < n; ++i) {
        i128 acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += static_cast<i128>(u[i][j]) * coords[j];
        mapped[i] = to_coord(acc);
      }
      visit(std::span<const std::int64_t>(mapped), nv, new_bound);
    } else {
      visit(std::span<const std::int64_t>(coords), nv, new_bound);
    }
    using K = std::decay_t<decltype(kbound)>;
    if (K(new_bound) < kbound) kbound = K(new_bound);
  };

  const Schur s = bareiss_rows(work);
  if (fits_int128(work, s, bound))
    run_kernel<i128>(s, n, bound, emit);
  else
    run_kernel<Integer>(s, n, bound, emit);
}

}  // namespace

void for_each_short_vector(const GramMatrix& g, const Integer& bound,
                           const std::function<void(std::span<const std::int64_t>, std::int64_t)>& visit) {
  enumerate(g, bound, [&](std::span<const std::int64_t> v, std::int64_t norm, std::int64_t&) { visit(v, norm); });
}

ShortVectorList short_vectors(const GramMatrix& g, const Rational& bound) {
  ShortVectorList out{bound, {}};
  const Integer b = floor(bound);
  enumerate(g, b, [&](std::span<const std::int64_t> v, std::int64_t norm, std::int64_t&) {
    ShortVector sv{std::vector<std::int64_t>(v.begin(), v.end()), norm};
    auto first = std::find_if(sv.coords.begin(), sv.coords.end(), [](std::int64_t c) { return c != 0; });
    if (*first < 0)
      for (auto& c : sv.coords) c = -c;
    out.vectors.push_back(std::move(sv));
  });
  std::sort(out.vectors.begin(), out.vectors.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.coords < b.coords;
  });
  return out;
}

std::vector<std::int64_t> norm_counts(const GramMatrix& g, std::int64_t max_norm) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(std::max<std::int64_t>(max_norm, 0)) + 1, 0);
  counts[0] = 1;
  enumerate(g, Integer(max_norm), [&](std::span<const std::int64_t>, std::int64_t norm, std::int64_t&) {
    counts[static_cast<std::size_t>(norm)] += 2;
  });
  return counts;
}

Integer min_norm(const GramMatrix& g) {
  if (g.rank() == 0) throw std::invalid_argument("min_norm: rank-0 lattice has no nonzero vectors");
  const ReducedBasis red = lll_reduce(g);
  Integer best = red.gram.min_diagonal();
  // Search only for strictly shorter vectors, tightening as they appear.
  enumerate(red.gram, best - 1, [&](std::span<const std::int64_t>, std::int64_t norm, std::int64_t& bound) {
    if (norm < best) best = norm;
    bound = norm - 1;
  });
  return best;
}

GramMatrix scaled_dual(const GramMatrix& g) {
  const Integer dt = det(g);
  RationalMatrix inv = dual_gram(g);
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) inv(i, j) *= dt;
  auto adj = to_integer(inv);
  if (!adj) throw std::logic_error("scaled_dual: adjugate is not integral");
  return make_gram(*adj);
}

Rational min_dual_norm(const GramMatrix& g) {
  return Rational(min_norm(scaled_dual(g)), det(g));
}

bool generated_by_norms_up_to(const GramMatrix& g, const Integer& bound) {
  LatticeSpan span(g.rank());
  enumerate(g, bound, [&](std::span<const std::int64_t> v, std::int64_t, std::int64_t& kbound) {
    span.insert(v);
    if (span.is_everything()) kbound = 0;  // nothing left to learn
  });
  return span.is_everything();
}

Projection project_onto_sublattice(const GramMatrix& q, const IntMatrix& basis,
                                   std::span<const Integer> v) {
  const std::size_t n = q.rank();
  if (basis.rows() != n || v.size() != n) throw std::invalid_argument("project_onto_sublattice: dimension mismatch");
  const std::size_t m = basis.cols();
  const IntMatrix gl = congruence(q, basis);
  // rhs_i = (v, w_i)
  IntMatrix vcol(n, 1);
  for (std::size_t i = 0; i < n; ++i) vcol(i, 0) = v[i];
  const IntMatrix rhs = basis.transpose() * (q.entries() * vcol);
  RationalVector b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = Rational(rhs(i, 0));
  auto c = solve(to_rational(gl), b);
  if (!c) throw SingularSublattice();

  Projection p;
  p.coords = *c;
  p.norm = 0;
  p.in_dual = true;
  for (std::size_t i = 0; i < m; ++i) {
    Rational ip = 0;  // (pi(v), w_i)
    for (std::size_t j = 0; j < m; ++j) ip += Rational(gl(i, j)) * p.coords[j];
    p.norm += p.coords[i] * ip;
    if (!is_integral(ip)) p.in_dual = false;
  }
  return p;
}

Integer inner(const GramMatrix& g, std::span<const std::int64_t> u, std::span<const std::int64_t> w) {
  Integer s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0) row += g(i, j) * w[j];
    s += row * u[i];
  }
  return s;
}

Integer inner(const GramMatrix& g, std::span<const Integer> u, std::span<const Integer> w) {
  Integer s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0) row += g(i, j) * w[j];
    s += row * u[i];
  }
  return s;
}

}  // namespace lat
