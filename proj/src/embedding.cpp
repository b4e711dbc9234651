#include "lat/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lat/enumeration.hpp"
#include "lat/reduction.hpp"

namespace lat {

bool Embedding::verify() const {
  if (map.rows() != target.rank() || map.cols() != source.rank()) return false;
  return congruence(target, map) == source.entries();
}

Embedding make_embedding(GramMatrix source, GramMatrix target, IntMatrix map) {
  Embedding e{std::move(source), std::move(target), std::move(map)};
  if (!e.verify()) throw std::logic_error("embedding certificate does not verify");
  return e;
}

namespace {

using i128 = __int128;

struct Candidate {
  std::vector<std::int64_t> coords;
  std::vector<std::int64_t> gram_image;  // G_Q * coords
};

std::int64_t narrow(i128 v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("represents: inner product exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(std::size_t n, std::vector<std::vector<Candidate>> candidates,
                  std::vector<std::vector<std::int64_t>> required)
      : n_(n), cands_(std::move(candidates)), required_(std::move(required)) {}

  // Image coordinates per level, or nothing if the search is exhausted.
  std::optional<std::vector<std::vector<std::int64_t>>> run() {
    placed_.assign(cands_.size(), nullptr);
    if (!place(0)) return std::nullopt;
    std::vector<std::vector<std::int64_t>> out;
    for (const Candidate* c : placed_) out.push_back(c->coords);
    return out;
  }

 private:
  bool place(std::size_t level) {
    if (level == cands_.size()) return true;
    for (const Candidate& c : cands_[level]) {
      bool ok = true;
      for (std::size_t j = 0; j < level && ok; ++j) {
        i128 ip = 0;
        const auto& g = placed_[j]->gram_image;
        for (std::size_t t = 0; t < n_; ++t)
          if (c.coords[t] != 0) ip += static_cast<i128>(c.coords[t]) * g[t];
        ok = ip == required_[level][j];
      }
      if (!ok) continue;
      placed_[level] = &c;
      if (place(level + 1)) return true;
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<Candidate>> cands_;
  std::vector<std::vector<std::int64_t>> required_;  // required_[k][j] = (b_k, b_j), j < k
  std::vector<const Candidate*> placed_;
};

bool is_perfect_square(const Integer& a) {
  if (a < 0) return false;
  const Integer r = isqrt(a);
  return r * r == a;
}

}  // namespace

std::optional<Embedding> represents(const GramMatrix& q, const GramMatrix& l) {
  const std::size_t n = q.rank(), m = l.rank();
  if (m == 0) return make_embedding(l, q, IntMatrix(n, 0));
  if (m > n) return std::nullopt;

  // Necessary conditions that are cheap relative to the search.
  if (m == n) {
    const Integer dq = det(q), dl = det(l);
    if (dl % dq != 0 || !is_perfect_square(dl / dq)) return std::nullopt;
  }
  if (min_norm(l) < min_norm(q)) return std::nullopt;

  const ReducedBasis red = lll_reduce(l);
  const GramMatrix& r = red.gram;
  // Components of the basis graph (edges where r(i, j) != 0), largest first;
  // inside a component, each vector is linked to one already placed.
  std::vector<std::size_t> comp(m, m);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s0 = 0; s0 < m; ++s0) {
    if (comp[s0] != m) continue;
    comps.emplace_back();
    std::vector<std::size_t> stack{s0};
    comp[s0] = comps.size() - 1;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      comps.back().push_back(i);
      for (std::size_t j = 0; j < m; ++j)
        if (comp[j] == m && r(i, j) != 0) {
          comp[j] = comps.size() - 1;
          stack.push_back(j);
        }
    }
  }
  std::stable_sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) { return x.size() > y.size(); });

  std::vector<std::size_t> order;
  for (const auto& members : comps) {
    std::vector<bool> placed(members.size(), false);
    const std::size_t start = order.size();
    while (order.size() - start < members.size()) {
      std::size_t best = members.size();
      bool best_linked = false;
      for (std::size_t t = 0; t < members.size(); ++t) {
        if (placed[t]) continue;
        bool linked = false;
        for (std::size_t k = start; k < order.size(); ++k) linked = linked || r(members[t], order[k]) != 0;
        if (best == members.size() || (linked && !best_linked) ||
            (linked == best_linked && r(members[t], members[t]) > r(members[best], members[best]))) {
          best = t;
          best_linked = linked;
        }
      }
      placed[best] = true;
      order.push_back(members[best]);
    }
  }

  const auto qg = q.entries_int64();
  if (!qg) throw std::overflow_error("represents: target Gram entries exceed 64 bits");

  std::map<std::int64_t, std::vector<Candidate>> by_norm;
  for (const ShortVector& v : short_vectors(q, Rational(r.max_diagonal())).vectors) {
    Candidate c{v.coords, std::vector<std::int64_t>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      i128 acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += static_cast<i128>((*qg)[i * n + j]) * v.coords[j];
      c.gram_image[i] = narrow(acc);
    }
    by_norm[v.norm].push_back(std::move(c));
  }

  std::vector<std::vector<Candidate>> cands(m);
  std::vector<std::vector<std::int64_t>> required(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t bk = order[k];
    const std::int64_t norm = checked_int64(r(bk, bk), "represents");
    auto it = by_norm.find(norm);
    if (it == by_norm.end()) return std::nullopt;
    for (const Candidate& c : it->second) {
      cands[k].push_back(c);
      // -T is an embedding whenever T is, so the first image keeps its
      // canonical sign.
      if (k > 0) {
        Candidate neg = c;
        for (auto& x : neg.coords) x = -x;
        for (auto& x : neg.gram_image) x = -x;
        cands[k].push_back(std::move(neg));
      }
    }
    for (std::size_t j = 0; j < k; ++j) required[k].push_back(checked_int64(r(bk, order[j]), "represents"));
  }

  auto images = EmbeddingSearch(n, std::move(cands), std::move(required)).run();
  if (!images) return std::nullopt;

  IntMatrix t_red(n, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) t_red(i, order[k]) = (*images)[k][i];
  // Reduced basis = original basis * U, so original images are T_red * U^{-1}.
  return make_embedding(l, q, t_red * unimodular_inverse(red.transform));
}

std::optional<Embedding> is_isometric(const GramMatrix& g1, const GramMatrix& g2) {
  if (g1.rank() != g2.rank() || det(g1) != det(g2)) return std::nullopt;
  if (g1.rank() > 0) {
    const Integer m = std::min(min_norm(g1), min_norm(g2));
    const auto cap = static_cast<std::int64_t>(m);
    if (norm_counts(g1, cap) != norm_counts(g2, cap)) return std::nullopt;
  }
  // Equal rank and determinant: any embedding has index 1.
  return represents(g2, g1);
}

Embedding orthogonal_complement(const GramMatrix& q, const Embedding& e) {
  if (!(e.target == q)) throw std::invalid_argument("orthogonal_complement: embedding targets another lattice");
  const IntMatrix constraints = e.map.transpose() * q.entries();
  const IntMatrix kernel = integer_kernel(constraints);
  if (kernel.cols() == 0) return make_embedding(GramMatrix(), q, kernel);
  const ReducedBasis red = lll_reduce(make_gram(congruence(q, kernel)));
  return make_embedding(red.gram, q, kernel * red.transform);
}

SummandSplit unimodular_summand_split(const GramMatrix& q, const Embedding& e) {
  if (det(e.source) != 1) throw NotUnimodular();
  const Embedding comp = orthogonal_complement(q, e);
  Embedding cert = make_embedding(direct_sum(e.source, comp.source), q, hconcat(e.map, comp.map));
  if (det(cert.source) != det(q))
    throw std::logic_error("unimodular sublattice and its complement do not span the lattice");
  return {comp.source, std::move(cert)};
}

Embedding compose(const Embedding& outer, const Embedding& inner) {
  if (!(outer.source == inner.target)) throw std::invalid_argument("compose: lattices do not match");
  return make_embedding(inner.source, outer.target, outer.map * inner.map);
}

Embedding direct_sum(const std::vector<Embedding>& parts) {
  std::vector<GramMatrix> sources, targets;
  std::size_t rows = 0, cols = 0;
  for (const Embedding& e : parts) {
    sources.push_back(e.source);
    targets.push_back(e.target);
    rows += e.map.rows();
    cols += e.map.cols();
  }
  IntMatrix map(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const Embedding& e : parts) {
    for (std::size_t i = 0; i < e.map.rows(); ++i)
      for (std::size_t j = 0; j < e.map.cols(); ++j) map(r0 + i, c0 + j) = e.map(i, j);
    r0 += e.map.rows();
    c0 += e.map.cols();
  }
  return make_embedding(direct_sum(sources), direct_sum(targets), std::move(map));
}

}  // namespace lat
