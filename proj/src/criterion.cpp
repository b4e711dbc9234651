#include "lat/criterion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "lat/decomposition.hpp"
#include "lat/enumeration.hpp"
#include "lat/reduction.hpp"

namespace lat {

FormSet make_form_set(std::vector<GramMatrix> members, std::string description) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (is_isometric(members[i], members[j])) throw DuplicateMember(i, j);
  return {std::move(members), std::move(description)};
}

namespace {

using i128 = __int128;

bool positive_definite(const std::vector<std::int64_t>& g, std::size_t n) {
  // Fraction-free elimination without pivoting; the pivots are the leading minors.
  std::vector<i128> m(g.begin(), g.end());
  i128 prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const i128 pivot = m[k * n + k];
    if (pivot <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i * n + j] = (pivot * m[i * n + j] - m[i * n + k] * m[k * n + j]) / prev;
    prev = pivot;
  }
  return true;
}

// Signed permutations fixing the diagonal; the sign of the first basis
// vector stays +1 since a global sign acts trivially.
struct Symmetry {
  std::vector<std::size_t> perm;
  std::vector<int> sign;
};

std::vector<Symmetry> diagonal_symmetries(const std::vector<std::int64_t>& diag) {
  const std::size_t n = diag.size();
  std::vector<Symmetry> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool keeps = true;
    for (std::size_t i = 0; i < n && keeps; ++i) keeps = diag[perm[i]] == diag[i];
    if (!keeps) continue;
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
      Symmetry s{perm, std::vector<int>(n, 1)};
      for (std::size_t i = 1; i < n; ++i)
        if (mask & (std::size_t{1} << (i - 1))) s.sign[i] = -1;
      out.push_back(std::move(s));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool lex_maximal(const std::vector<std::int64_t>& g, std::size_t n, const std::vector<Symmetry>& syms) {
  for (const Symmetry& s : syms) {
    for (std::size_t i = 0; i < n; ++i) {
      bool decided = false;
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::int64_t orig = g[i * n + j];
        const std::int64_t moved = s.sign[i] * s.sign[j] * g[s.perm[i] * n + s.perm[j]];
        if (moved > orig) return false;
        if (moved < orig) {
          decided = true;
          break;
        }
      }
      if (decided) break;
    }
  }
  return true;
}

struct Fingerprint {
  Integer det;
  std::vector<std::int64_t> counts;
  bool operator<(const Fingerprint& o) const {
    if (det != o.det) return det < o.det;
    return counts < o.counts;
  }
};

class ClassEnumerator {
 public:
  ClassEnumerator(const SearchSpace& space, const std::function<bool(const GramMatrix&)>& visit, Shard shard)
      : space_(space), visit_(visit), shard_(shard), n_(space.rank) {}

  void run() {
    std::vector<std::int64_t> diag(n_, 1);
    std::size_t index = 0;
    for (;;) {
      if (index++ % shard_.count == shard_.index) {
        if (n_ <= 4) buckets_.clear();
        if (!run_diagonal(diag)) return;
      }
      // Next nondecreasing tuple in lexicographic order.
      std::size_t k = n_;
      while (k > 0 && diag[k - 1] == space_.max_diag) --k;
      if (k == 0) return;
      const std::int64_t v = diag[k - 1] + 1;
      for (std::size_t i = k - 1; i < n_; ++i) diag[i] = v;
    }
  }

 private:
  bool run_diagonal(const std::vector<std::int64_t>& diag) {
    const auto syms = diagonal_symmetries(diag);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) pairs.emplace_back(i, j);

    std::vector<std::int64_t> g(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) g[i * n_ + i] = diag[i];
    std::vector<std::int64_t> limit(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      limit[p] = std::min(diag[pairs[p].first], diag[pairs[p].second]) / 2;
      g[pairs[p].first * n_ + pairs[p].second] = g[pairs[p].second * n_ + pairs[p].first] = limit[p];
    }
    // Off-diagonal entries run from +limit down to -limit, first pair slowest.
    for (;;) {
      if (!consider(diag, g, syms)) return false;
      std::size_t p = pairs.size();
      while (p > 0) {
        auto [i, j] = pairs[p - 1];
        if (g[i * n_ + j] > -limit[p - 1]) {
          --g[i * n_ + j];
          g[j * n_ + i] = g[i * n_ + j];
          break;
        }
        g[i * n_ + j] = g[j * n_ + i] = limit[p - 1];
        --p;
      }
      if (p == 0) return true;
    }
  }

  bool consider(const std::vector<std::int64_t>& diag, const std::vector<std::int64_t>& g,
                const std::vector<Symmetry>& syms) {
    if (!lex_maximal(g, n_, syms) || !positive_definite(g, n_)) return true;
    std::vector<std::vector<std::int64_t>> rows(n_);
    for (std::size_t i = 0; i < n_; ++i) rows[i].assign(g.begin() + i * n_, g.begin() + (i + 1) * n_);
    GramMatrix gram = make_gram(n_, rows);
    Fingerprint fp{det(gram), {}};
    if (space_.max_det && fp.det > *space_.max_det) return true;

    const auto vecs = short_vectors(gram, Rational(space_.max_diag)).vectors;
    if (vecs.empty() || vecs.front().norm != diag[0]) return true;
    if (n_ <= 4) {
      // Minkowski-reduced Grams have the successive minima on the diagonal.
      LatticeSpan span(n_);
      std::size_t k = 0;
      for (const ShortVector& v : vecs) {
        if (k == n_) break;
        span.insert(std::span<const std::int64_t>(v.coords));
        if (span.rank() > k) {
          if (v.norm != diag[k]) return true;
          ++k;
        }
      }
    }
    fp.counts.assign(static_cast<std::size_t>(space_.max_diag), 0);
    for (const ShortVector& v : vecs) fp.counts[static_cast<std::size_t>(v.norm - 1)] += 2;

    auto& bucket = buckets_[fp];
    for (const GramMatrix& seen : bucket)
      if (is_isometric(gram, seen)) return true;
    bucket.push_back(gram);
    return visit_(gram);
  }

  const SearchSpace& space_;
  const std::function<bool(const GramMatrix&)>& visit_;
  Shard shard_;
  std::size_t n_;
  std::map<Fingerprint, std::vector<GramMatrix>> buckets_;
};

void check_space(const SearchSpace& space, Shard shard) {
  if (space.rank < 1 || space.max_diag < 1) throw std::invalid_argument("search space needs rank >= 1 and max_diag >= 1");
  if (shard.count < 1 || shard.index >= shard.count) throw std::invalid_argument("shard index out of range");
}

std::optional<std::vector<Embedding>> embed_all(const GramMatrix& q, const std::vector<GramMatrix>& members) {
  std::vector<Embedding> out;
  for (const GramMatrix& l : members) {
    auto e = represents(q, l);
    if (!e) return std::nullopt;
    out.push_back(std::move(*e));
  }
  return out;
}

// First target q fails to represent.
std::optional<GramMatrix> missing_target(const GramMatrix& q, const std::vector<GramMatrix>& targets) {
  for (const GramMatrix& t : targets)
    if (!represents(q, t)) return t;
  return std::nullopt;
}

}  // namespace

void for_each_class(const SearchSpace& space, const std::function<bool(const GramMatrix&)>& visit, Shard shard) {
  check_space(space, shard);
  ClassEnumerator(space, visit, shard).run();
}

std::vector<GramMatrix> enumerate_classes(const SearchSpace& space, Shard shard) {
  std::vector<GramMatrix> out;
  for_each_class(space, [&](const GramMatrix& g) {
    out.push_back(g);
    return true;
  }, shard);
  return out;
}

bool represents_all(const GramMatrix& q, const FormSet& s) {
  return std::all_of(s.members.begin(), s.members.end(), [&](const GramMatrix& l) { return represents(q, l).has_value(); });
}

bool verify_counterexample(const Counterexample& c, const FormSet& s_prime) {
  if (c.certificates.size() != s_prime.members.size()) return false;
  for (std::size_t i = 0; i < c.certificates.size(); ++i) {
    const Embedding& e = c.certificates[i];
    if (!(e.source == s_prime.members[i]) || !(e.target == c.q) || !e.verify()) return false;
  }
  return !represents(c.q, c.missing);
}

CriterionReport check_criterion(const std::vector<GramMatrix>& targets, const FormSet& s_prime,
                                const SearchSpace& space, Shard shard) {
  for (std::size_t i = 0; i < s_prime.members.size(); ++i) {
    const bool member = std::any_of(targets.begin(), targets.end(),
                                    [&](const GramMatrix& t) { return represents(t, s_prime.members[i]).has_value(); });
    if (!member) throw MemberNotInS(i);
  }
  CriterionReport report;
  report.space = space;
  report.shard = shard;
  for_each_class(space, [&](const GramMatrix& q) {
    ++report.classes_checked;
    auto certs = embed_all(q, s_prime.members);
    if (!certs) return true;
    auto missing = missing_target(q, targets);
    if (!missing) return true;
    report.verdict = Verdict::Counterexample;
    report.counterexample = Counterexample{q, std::move(*missing), std::move(*certs)};
    return false;
  }, shard);
  return report;
}

CriterionReport check_criterion(const GramMatrix& a, const FormSet& s_prime, const SearchSpace& space, Shard shard) {
  return check_criterion(std::vector<GramMatrix>{a}, s_prime, space, shard);
}

bool MinimalityReport::minimal() const {
  return std::all_of(entries.begin(), entries.end(), [](const MinimalityEntry& e) { return e.witness.has_value(); });
}

MinimalityReport check_minimality(const std::vector<GramMatrix>& targets, const FormSet& s_prime,
                                  const std::vector<GramMatrix>& witnesses, const SearchSpace& space) {
  MinimalityReport report;
  report.space = space;
  for (std::size_t i = 0; i < s_prime.members.size(); ++i) {
    std::vector<GramMatrix> rest;
    for (std::size_t j = 0; j < s_prime.members.size(); ++j)
      if (j != i) rest.push_back(s_prime.members[j]);
    auto is_witness = [&](const GramMatrix& q) { return embed_all(q, rest) && missing_target(q, targets); };

    MinimalityEntry entry{s_prime.members[i], std::nullopt, false};
    for (const GramMatrix& w : witnesses) {
      if (is_witness(w)) {
        entry.witness = w;
        entry.witness_from_list = true;
        break;
      }
    }
    if (!entry.witness) {
      for_each_class(space, [&](const GramMatrix& q) {
        if (!is_witness(q)) return true;
        entry.witness = q;
        return false;
      });
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

MinimalityReport check_minimality(const GramMatrix& a, const FormSet& s_prime,
                                  const std::vector<GramMatrix>& witnesses, const SearchSpace& space) {
  return check_minimality(std::vector<GramMatrix>{a}, s_prime, witnesses, space);
}

bool check_norm2_lemma(const GramMatrix& q) {
  std::vector<std::vector<std::int64_t>> units, twos;
  for (const ShortVector& v : short_vectors(q, Rational(2)).vectors) {
    if (v.norm == 1) {
      units.push_back(v.coords);
      std::vector<std::int64_t> neg = v.coords;
      for (auto& x : neg) x = -x;
      units.push_back(std::move(neg));
    } else {
      twos.push_back(v.coords);
    }
  }
  for (const auto& v : twos) {
    bool orthogonal = true;
    for (const auto& u : units) orthogonal = orthogonal && inner(q, u, v) == 0;
    if (orthogonal) continue;
    bool split = false;
    for (const auto& u : units) {
      std::vector<std::int64_t> w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] - u[i];
      if (inner(q, w, w) == 1 && inner(q, u, w) == 0) {
        split = true;
        break;
      }
    }
    if (!split) return false;
  }
  return true;
}

Prop2Result check_prop2_hypothesis(const GramMatrix& l, const GramMatrix& l_prime) {
  Prop2Result r;
  r.min_dual_norm = min_dual_norm(l);
  if (l_prime.rank() == 0) {
    r.generating_bound = 0;
  } else {
    const Integer top = lll_reduce(l_prime).gram.max_diagonal();
    bool found = false;
    for (Integer b = 1; b <= top && !found; ++b) {
      if (generated_by_norms_up_to(l_prime, b)) {
        r.generating_bound = b;
        found = true;
      }
    }
    if (!found) throw NotGenerated();
  }
  r.holds = Rational(r.generating_bound) < r.min_dual_norm;
  return r;
}

bool Prop3Report::passed() const {
  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  return all(unimodular) && not_coprime.empty() && covers_ground && all(part_needed);
}

Prop3Report check_prop3(const PartitionFamily& family) {
  const auto& ground = family.ground.members;
  Prop3Report r;
  for (const GramMatrix& g : ground) r.unimodular.push_back(det(g) == 1);
  for (std::size_t i = 0; i < ground.size(); ++i)
    for (std::size_t j = i + 1; j < ground.size(); ++j)
      if (!coprime(ground[i], ground[j])) r.not_coprime.emplace_back(i, j);

  std::vector<bool> covered(ground.size(), false);
  for (const auto& part : family.parts) {
    if (part.empty()) throw std::invalid_argument("check_prop3: empty part");
    std::vector<GramMatrix> members;
    for (std::size_t idx : part) {
      if (idx >= ground.size()) throw std::invalid_argument("check_prop3: part index out of range");
      covered[idx] = true;
      members.push_back(ground[idx]);
    }
    r.criterion_set.push_back(direct_sum(members));
  }
  r.covers_ground = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });

  for (std::size_t p = 0; p < family.parts.size(); ++p) {
    std::vector<bool> others(ground.size(), false);
    for (std::size_t q = 0; q < family.parts.size(); ++q)
      if (q != p)
        for (std::size_t idx : family.parts[q]) others[idx] = true;
    r.part_needed.push_back(!std::all_of(others.begin(), others.end(), [](bool b) { return b; }));
  }
  return r;
}

}  // namespace lat
