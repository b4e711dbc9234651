#include "lat/gram.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lat {

NotSymmetric::NotSymmetric(std::size_t i, std::size_t j)
    : Error("Gram matrix is not symmetric at (" + std::to_string(i) + ", " +
            std::to_string(j) + ")"),
      row(i),
      col(j) {}

NotPositiveDefinite::NotPositiveDefinite(std::size_t k, const Integer& value)
    : Error("Gram matrix is not positive-definite: leading minor of size " +
            std::to_string(k) + " is " + to_string(value)),
      minor_size(k) {}

std::optional<std::vector<std::int64_t>> GramMatrix::entries_int64() const {
  std::vector<std::int64_t> out;
  out.reserve(entries_.data().size());
  for (const auto& e : entries_.data()) {
    auto v = to_int64(e);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

Integer GramMatrix::max_diagonal() const {
  Integer m = 0;
  for (std::size_t i = 0; i < rank(); ++i) m = std::max(m, entries_(i, i));
  return m;
}

Integer GramMatrix::min_diagonal() const {
  if (rank() == 0) return 0;
  Integer m = entries_(0, 0);
  for (std::size_t i = 1; i < rank(); ++i) m = std::min(m, entries_(i, i));
  return m;
}

bool operator<(const GramMatrix& a, const GramMatrix& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return std::lexicographical_compare(a.entries_.data().begin(), a.entries_.data().end(),
                                      b.entries_.data().begin(), b.entries_.data().end());
}

GramMatrix make_gram(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw FormatError("Gram matrix must be square");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) throw NotSymmetric(i, j);

  // Bareiss elimination without pivoting: the k-th pivot is the leading
  // principal minor of size k+1.
  IntMatrix a = m;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) throw NotPositiveDefinite(k + 1, a(k, k));
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return GramMatrix(m);
}

GramMatrix make_gram(std::size_t rank, const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.size() != rank) throw FormatError("Gram matrix: expected " + std::to_string(rank) + " rows");
  for (const auto& r : rows)
    if (r.size() != rank) throw FormatError("Gram matrix: expected " + std::to_string(rank) + " columns");
  return make_gram(from_rows(rows));
}

GramMatrix diagonal_gram(const std::vector<std::int64_t>& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return make_gram(m);
}

Integer det(const GramMatrix& g) { return determinant(g.entries()); }

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b) {
  const std::size_t n = a.rank(), m = b.rank();
  IntMatrix s(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s(n + i, n + j) = b(i, j);
  return make_gram(s);
}

GramMatrix direct_sum(const std::vector<GramMatrix>& parts) {
  GramMatrix acc;
  for (const auto& p : parts) acc = direct_sum(acc, p);
  return acc;
}

GramMatrix scale(const GramMatrix& g, const Integer& m) {
  if (m < 1) throw std::invalid_argument("scale: factor must be >= 1");
  IntMatrix s = g.entries();
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) *= m;
  return make_gram(s);
}

RationalMatrix dual_gram(const GramMatrix& g) { return inverse(g.entries()); }

IntMatrix congruence(const GramMatrix& g, const IntMatrix& t) {
  return t.transpose() * (g.entries() * t);
}

std::string to_text(const GramMatrix& g) {
  std::ostringstream os;
  os << g.rank() << '\n';
  for (std::size_t i = 0; i < g.rank(); ++i) {
    for (std::size_t j = 0; j < g.rank(); ++j) os << (j ? " " : "") << g(i, j);
    os << '\n';
  }
  return os.str();
}

namespace {

Integer parse_integer_token(const std::string& tok, std::size_t line) {
  std::size_t k = 0;
  if (k < tok.size() && (tok[k] == '-' || tok[k] == '+')) ++k;
  if (k == tok.size()) throw FormatError("line " + std::to_string(line) + ": bad integer '" + tok + "'");
  for (std::size_t i = k; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9')
      throw FormatError("line " + std::to_string(line) + ": bad integer '" + tok + "'");
  return Integer(tok[0] == '+' ? tok.substr(1) : tok);
}

}  // namespace

GramMatrix parse_gram_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::vector<Integer>> rows;
  std::optional<std::size_t> rank;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<Integer> nums;
    std::string tok;
    while (ls >> tok) nums.push_back(parse_integer_token(tok, line_no));
    if (!rank) {
      if (nums.size() != 1 || nums[0] < 0)
        throw FormatError("line " + std::to_string(line_no) + ": expected the rank");
      rank = nums[0].convert_to<std::size_t>();
      continue;
    }
    if (nums.size() != *rank)
      throw FormatError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(*rank) + " entries");
    rows.push_back(std::move(nums));
  }
  if (!rank) throw FormatError("empty Gram file");
  if (rows.size() != *rank)
    throw FormatError("expected " + std::to_string(*rank) + " rows, got " + std::to_string(rows.size()));
  IntMatrix m(*rank, *rank);
  for (std::size_t i = 0; i < *rank; ++i)
    for (std::size_t j = 0; j < *rank; ++j) m(i, j) = rows[i][j];
  return make_gram(m);
}

GramMatrix read_gram_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open Gram file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_gram_text(ss.str());
}

std::ostream& operator<<(std::ostream& os, const GramMatrix& g) { return os << to_text(g); }

}  // namespace lat
