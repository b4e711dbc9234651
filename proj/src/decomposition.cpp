#include "lat/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "lat/enumeration.hpp"
#include "lat/reduction.hpp"

namespace lat {

namespace {

using i128 = __int128;

struct Vec {
  std::vector<std::int64_t> coords;
  std::vector<std::int64_t> gram_image;
  std::int64_t norm;
};

i128 dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  i128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += static_cast<i128>(a[i]) * b[i];
  return s;
}

struct Component {
  std::vector<std::size_t> members;
  std::vector<std::size_t> spanning;  // members forming a basis of the rational span
};

// Union-by-orthogonality over indecomposable vectors. A vector joins every
// component it is not orthogonal to; checking the component's spanning
// members suffices because they span the component rationally.
std::vector<Component> components(const std::vector<Vec>& vecs, std::size_t n) {
  std::vector<Component> comps;
  LatticeSpan global(n);  // span of all indecomposables seen so far

  auto independent = [&](std::size_t v) {
    if (global.rank() == n) return false;
    const std::size_t before = global.rank();
    global.insert(std::span<const std::int64_t>(vecs[v].coords));
    return global.rank() > before;
  };

  for (std::size_t v = 0; v < vecs.size(); ++v) {
    std::vector<std::size_t> hits;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (std::size_t s : comps[c].spanning) {
        if (dot(vecs[v].coords, vecs[s].gram_image) != 0) {
          hits.push_back(c);
          break;
        }
      }
    }
    if (hits.empty()) {
      comps.push_back({});
      hits.push_back(comps.size() - 1);
    }
    // Fold the other hit components into the largest one.
    std::size_t target = hits[0];
    for (std::size_t c : hits)
      if (comps[c].members.size() > comps[target].members.size()) target = c;
    for (auto it = hits.rbegin(); it != hits.rend(); ++it) {
      if (*it == target) continue;
      Component& c = comps[*it];
      comps[target].members.insert(comps[target].members.end(), c.members.begin(), c.members.end());
      comps[target].spanning.insert(comps[target].spanning.end(), c.spanning.begin(), c.spanning.end());
    }
    comps[target].members.push_back(v);
    // Components are mutually orthogonal, so v is independent of its own
    // component's span iff it is independent of everything seen so far.
    if (independent(v)) {
      comps[target].spanning.push_back(v);
    }
    for (auto it = hits.rbegin(); it != hits.rend(); ++it)
      if (*it != target) comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(*it));
  }
  return comps;
}

}  // namespace

Decomposition indecomposable_summands(const GramMatrix& g) {
  const std::size_t n = g.rank();
  Decomposition out;
  if (n == 0) return out;

  const ReducedBasis red = lll_reduce(g, Rational(99, 100));
  const GramMatrix& r = red.gram;
  const auto rg = r.entries_int64();
  if (!rg) throw std::overflow_error("indecomposable_summands: Gram entries exceed 64 bits");

  // Any bound whose vectors generate the lattice works; the reduced maximal
  // diagonal always does but can be far too large (re-based Leech).
  Integer bound = r.min_diagonal();
  while (bound < r.max_diagonal() && !generated_by_norms_up_to(r, bound)) ++bound;

  std::vector<Vec> all;
  for (const ShortVector& sv : short_vectors(r, Rational(bound)).vectors) {
    Vec v{sv.coords, std::vector<std::int64_t>(n), sv.norm};
    for (std::size_t i = 0; i < n; ++i) {
      i128 acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += static_cast<i128>((*rg)[i * n + j]) * sv.coords[j];
      v.gram_image[i] = static_cast<std::int64_t>(acc);
    }
    all.push_back(std::move(v));
  }

  // v is decomposable iff v = x + (v - x) with both nonzero and
  // (x, v - x) >= 0, i.e. |(x, v)| >= (x, x) for some shorter x (either sign).
  std::vector<Vec> indecomposable;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool decomposable = false;
    for (std::size_t j = 0; j < all.size() && all[j].norm < all[i].norm; ++j) {
      i128 ip = dot(all[j].coords, all[i].gram_image);
      if (ip < 0) ip = -ip;
      if (ip >= all[j].norm) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) indecomposable.push_back(all[i]);
  }

  struct Part {
    GramMatrix gram;
    IntMatrix basis;  // in g's coordinates
  };
  std::vector<Part> parts;
  for (const Component& c : components(indecomposable, n)) {
    LatticeSpan span(n);
    for (std::size_t m : c.members) {
      span.insert(std::span<const std::int64_t>(indecomposable[m].coords));
      if (span.is_everything()) break;
    }
    const IntMatrix basis = span.basis();
    const ReducedBasis pr = lll_reduce(make_gram(congruence(r, basis)));
    parts.push_back({pr.gram, red.transform * basis * pr.transform});
  }

  std::size_t total_rank = 0;
  Integer det_product = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    total_rank += parts[i].gram.rank();
    det_product *= det(parts[i].gram);
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const IntMatrix cross = parts[i].basis.transpose() * g.entries() * parts[j].basis;
      for (const auto& e : cross.data())
        if (e != 0) throw std::logic_error("decomposition: summands are not orthogonal");
    }
  }
  if (total_rank != n || det_product != det(g))
    throw std::logic_error("decomposition: summands do not span the lattice");

  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    if (a.gram.rank() != b.gram.rank()) return a.gram.rank() < b.gram.rank();
    const Integer da = det(a.gram), db = det(b.gram);
    if (da != db) return da < db;
    return a.gram < b.gram;
  });
  for (auto& p : parts) {
    out.embeddings.push_back(make_embedding(p.gram, g, p.basis));
    out.summands.push_back(std::move(p.gram));
  }
  return out;
}

bool is_indecomposable(const GramMatrix& g) {
  return indecomposable_summands(g).summands.size() == 1;
}

bool coprime(const GramMatrix& g1, const GramMatrix& g2) {
  const Decomposition a = indecomposable_summands(g1);
  const Decomposition b = indecomposable_summands(g2);
  for (const auto& x : a.summands)
    for (const auto& y : b.summands)
      if (is_isometric(x, y)) return false;
  return true;
}

bool same_summands(const Decomposition& a, const Decomposition& b) {
  if (a.summands.size() != b.summands.size()) return false;
  std::vector<bool> used(b.summands.size(), false);
  for (const auto& x : a.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < b.summands.size() && !matched; ++j) {
      if (used[j]) continue;
      if (x == b.summands[j] || is_isometric(x, b.summands[j])) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace lat
