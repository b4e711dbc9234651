#include "lat/expr.hpp"

#include <cctype>
#include <limits>

#include "lat/catalog.hpp"

namespace lat {

ParseError::ParseError(std::size_t pos, const std::string& message)
    : Error("parse error at position " + std::to_string(pos) + ": " + message), position(pos) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  LatticeExpr parse() {
    LatticeExpr e = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip_space();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const int digit = s_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        pos_ = start;
        fail("integer too large");
      }
      v = v * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  std::int64_t positive_integer(const char* what) {
    const std::size_t start = (skip_space(), pos_);
    const std::int64_t v = integer();
    if (v < 1) {
      pos_ = start;
      fail(std::string(what) + " must be >= 1");
    }
    return v;
  }

  LatticeExpr expr() {
    std::vector<LatticeExpr> terms;
    terms.push_back(term());
    while (accept('+')) terms.push_back(term());
    if (terms.size() == 1) return std::move(terms.front());
    LatticeExpr e;
    e.kind = LatticeExpr::Kind::Sum;
    e.children = std::move(terms);
    return e;
  }

  LatticeExpr term() {
    std::optional<std::int64_t> factor;
    if (at_digit()) {
      factor = positive_integer("scale factor");
      expect('*');
    }
    LatticeExpr e = atom();
    if (accept('^')) {
      LatticeExpr p;
      p.kind = LatticeExpr::Kind::Power;
      p.factor = positive_integer("power");
      p.children.push_back(std::move(e));
      e = std::move(p);
    }
    if (factor) {
      LatticeExpr sc;
      sc.kind = LatticeExpr::Kind::Scale;
      sc.factor = *factor;
      sc.children.push_back(std::move(e));
      e = std::move(sc);
    }
    return e;
  }

  LatticeExpr atom() {
    if (accept('(')) {
      LatticeExpr e = expr();
      expect(')');
      return e;
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a lattice name, diag(...) or '('");
    const std::string name(s_.substr(start, pos_ - start));

    LatticeExpr e;
    if (name == "diag") {
      e.kind = LatticeExpr::Kind::Diag;
      expect('(');
      do {
        e.diag.push_back(positive_integer("diagonal entry"));
      } while (accept(','));
      expect(')');
      return e;
    }
    if (!catalog_has(name)) {
      pos_ = start;
      throw UnknownName(name);
    }
    e.kind = LatticeExpr::Kind::Catalog;
    e.name = name;
    if (catalog_takes_argument(name)) {
      expect('(');
      e.arg = positive_integer("lattice parameter");
      expect(')');
    }
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool is_atom(const LatticeExpr& e) {
  return e.kind == LatticeExpr::Kind::Catalog || e.kind == LatticeExpr::Kind::Diag;
}

}  // namespace

LatticeExpr parse_lattice_expr(std::string_view text) { return Parser(text).parse(); }

GramMatrix evaluate(const LatticeExpr& e) {
  switch (e.kind) {
    case LatticeExpr::Kind::Catalog:
      return catalog(e.name, e.arg);
    case LatticeExpr::Kind::Diag:
      return diagonal_gram(e.diag);
    case LatticeExpr::Kind::Sum: {
      std::vector<GramMatrix> parts;
      for (const auto& c : e.children) parts.push_back(evaluate(c));
      return direct_sum(parts);
    }
    case LatticeExpr::Kind::Scale:
      return scale(evaluate(e.children.at(0)), e.factor);
    case LatticeExpr::Kind::Power: {
      const GramMatrix base = evaluate(e.children.at(0));
      return direct_sum(std::vector<GramMatrix>(static_cast<std::size_t>(e.factor), base));
    }
  }
  throw std::logic_error("evaluate: bad expression kind");
}

std::string to_string(const LatticeExpr& e) {
  switch (e.kind) {
    case LatticeExpr::Kind::Catalog:
      return e.name + (e.arg ? "(" + std::to_string(*e.arg) + ")" : "");
    case LatticeExpr::Kind::Diag: {
      std::string s = "diag(";
      for (std::size_t i = 0; i < e.diag.size(); ++i) s += (i ? "," : "") + std::to_string(e.diag[i]);
      return s + ")";
    }
    case LatticeExpr::Kind::Sum: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const auto& c = e.children[i];
        const std::string part = to_string(c);
        s += (i ? " + " : "") + (c.kind == LatticeExpr::Kind::Sum ? "(" + part + ")" : part);
      }
      return s;
    }
    case LatticeExpr::Kind::Power: {
      const auto& c = e.children.at(0);
      const std::string base = is_atom(c) ? to_string(c) : "(" + to_string(c) + ")";
      return base + "^" + std::to_string(e.factor);
    }
    case LatticeExpr::Kind::Scale: {
      const auto& c = e.children.at(0);
      const bool bare = is_atom(c) || (c.kind == LatticeExpr::Kind::Power);
      return std::to_string(e.factor) + "*" + (bare ? to_string(c) : "(" + to_string(c) + ")");
    }
  }
  throw std::logic_error("to_string: bad expression kind");
}

GramMatrix parse_expr(std::string_view text) { return evaluate(parse_lattice_expr(text)); }

}  // namespace lat
