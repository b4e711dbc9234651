#include "lat/catalog.hpp"

#include <array>
#include <charconv>

#include "lat/enumeration.hpp"
#include "lat/reduction.hpp"

namespace lat {

namespace {

GramMatrix cartan(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 2;
  for (auto [a, b] : edges) {
    m(a, b) = -1;
    m(b, a) = -1;
  }
  return make_gram(m);
}

// Bourbaki numbering, 0-based: chain 0-2-3-4-5-6-7 with node 1 on node 3.
GramMatrix exceptional(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 2}, {1, 3}};
  for (std::size_t i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return cartan(n, edges);
}

GramMatrix a_n(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return cartan(n, edges);
}

std::vector<std::vector<std::int64_t>> d_n_basis(std::size_t n, std::int64_t unit) {
  std::vector<std::vector<std::int64_t>> rows;
  if (n == 1) {
    rows.push_back({2 * unit});
    return rows;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<std::int64_t> v(n, 0);
    v[i] = unit;
    v[i + 1] = -unit;
    rows.push_back(v);
  }
  std::vector<std::int64_t> v(n, 0);
  v[n - 2] = unit;
  v[n - 1] = unit;
  rows.push_back(v);
  return rows;
}

GramMatrix d_n(std::size_t n) { return gram_from_generators(d_n_basis(n, 1), 1); }

GramMatrix d_n_plus(std::size_t n) {
  // Doubled coordinates: D_n becomes 2 D_n, the glue becomes (1, ..., 1).
  auto gens = d_n_basis(n, 2);
  gens.emplace_back(n, 1);
  return lll_reduce(gram_from_generators(gens, 4)).gram;
}

GramMatrix build_leech() {
  // Coordinates scaled by sqrt(8): x is in the lattice iff x = 2c + 4y or
  // x = (-3, 1, ..., 1) + 2c + 4y for Golay codewords c, with the usual sum
  // conditions. These generators span exactly that set.
  std::vector<std::vector<std::int64_t>> gens;
  for (std::uint32_t w : golay_generators()) {
    std::vector<std::int64_t> v(24, 0);
    for (int i = 0; i < 24; ++i)
      if (w >> i & 1u) v[i] = 2;
    gens.push_back(v);
  }
  for (int i = 1; i < 24; ++i) {
    std::vector<std::int64_t> plus(24, 0), minus(24, 0);
    plus[0] = 4;
    plus[i] = 4;
    minus[0] = 4;
    minus[i] = -4;
    gens.push_back(plus);
    gens.push_back(minus);
  }
  std::vector<std::int64_t> odd(24, 1);
  odd[0] = -3;
  gens.push_back(odd);
  return lll_reduce(gram_from_generators(gens, 8)).gram;
}

GramMatrix build_lambda23(const GramMatrix& leech) {
  const std::size_t n = leech.rank();
  const Integer m = min_norm(leech);
  std::vector<Integer> v(n);
  bool found = false;
  for (std::size_t i = 0; i < n && !found; ++i)
    if (leech(i, i) == m) {
      v[i] = 1;
      found = true;
    }
  if (!found) {
    for_each_short_vector(leech, m, [&](std::span<const std::int64_t> x, std::int64_t norm) {
      if (found || norm != m) return;
      for (std::size_t i = 0; i < n; ++i) v[i] = x[i];
      found = true;
    });
  }
  if (!found) throw std::logic_error("Leech lattice: no minimal vector found");
  // Complement: kernel of the row v^T G.
  IntMatrix row(1, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) row(0, j) += v[i] * leech(i, j);
  const IntMatrix k = integer_kernel(row);
  return lll_reduce(make_gram(congruence(leech, k))).gram;
}

const GramMatrix& leech() {
  static const GramMatrix g = build_leech();
  return g;
}

const GramMatrix& lambda23() {
  static const GramMatrix g = build_lambda23(leech());
  return g;
}

constexpr std::array<std::string_view, 4> kParameterised{"Zn", "An", "Dn", "DnPlus"};
constexpr std::array<std::string_view, 5> kFixed{"E6", "E7", "E8", "Leech", "Lambda23"};

}  // namespace

std::vector<std::uint32_t> golay_generators() {
  // Cyclic [23,12,7] code with generator 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11,
  // extended by an overall parity bit in coordinate 23.
  constexpr std::uint32_t poly = (1u << 0) | (1u << 2) | (1u << 4) | (1u << 5) | (1u << 6) |
                                 (1u << 10) | (1u << 11);
  std::vector<std::uint32_t> words;
  for (int shift = 0; shift < 12; ++shift) {
    std::uint32_t w = poly << shift;
    if (__builtin_popcount(w) % 2) w |= 1u << 23;
    words.push_back(w);
  }
  return words;
}

GramMatrix gram_from_generators(const std::vector<std::vector<std::int64_t>>& generators,
                                std::int64_t denominator) {
  if (generators.empty()) return GramMatrix();
  const std::size_t dim = generators.front().size();
  LatticeSpan span(dim);
  for (const auto& g : generators) span.insert(std::span<const std::int64_t>(g));
  const IntMatrix b = span.basis();
  IntMatrix gram = b.transpose() * b;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      if (gram(i, j) % denominator != 0)
        throw std::logic_error("gram_from_generators: inner products not divisible");
      gram(i, j) /= denominator;
    }
  return make_gram(gram);
}

bool catalog_takes_argument(std::string_view name) {
  for (auto n : kParameterised)
    if (n == name) return true;
  return false;
}

bool catalog_has(std::string_view name) {
  if (catalog_takes_argument(name)) return true;
  for (auto n : kFixed)
    if (n == name) return true;
  return false;
}

GramMatrix catalog(std::string_view name, std::optional<std::int64_t> arg) {
  const std::string full = std::string(name) + (arg ? "(" + std::to_string(*arg) + ")" : "");
  if (catalog_takes_argument(name) != arg.has_value()) throw UnknownName(full);
  if (arg) {
    const std::int64_t k = *arg;
    if (k < 1) throw UnknownName(full);
    const auto n = static_cast<std::size_t>(k);
    if (name == "Zn") return make_gram(IntMatrix::identity(n));
    if (name == "An") return a_n(n);
    if (name == "Dn") return d_n(n);
    if (name == "DnPlus") {
      if (k % 4 != 0) throw UnknownName(full);
      return d_n_plus(n);
    }
  }
  if (name == "E6") return exceptional(6);
  if (name == "E7") return exceptional(7);
  if (name == "E8") return exceptional(8);
  if (name == "Leech") return leech();
  if (name == "Lambda23") return lambda23();
  throw UnknownName(full);
}

GramMatrix catalog_by_name(std::string_view full) {
  const auto open = full.find('(');
  if (open == std::string_view::npos) return catalog(full);
  if (full.back() != ')') throw UnknownName(std::string(full));
  const std::string_view digits = full.substr(open + 1, full.size() - open - 2);
  std::int64_t k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) throw UnknownName(std::string(full));
  return catalog(full.substr(0, open), k);
}

}  // namespace lat
