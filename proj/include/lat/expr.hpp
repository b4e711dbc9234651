#ifndef LAT_EXPR_HPP
#define LAT_EXPR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lat/gram.hpp"

namespace lat {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position;  // 0-based offset into the input
};

// Lattice expressions:
//   Expr := Term ('+' Term)*          '+' is the orthogonal direct sum
//   Term := [Int '*'] Atom ['^' Int]  scaling and repeated direct sum
//   Atom := Name ['(' Int ')'] | 'diag(' Int (',' Int)* ')' | '(' Expr ')'
struct LatticeExpr {
  enum class Kind { Catalog, Diag, Sum, Scale, Power };

  Kind kind = Kind::Diag;
  std::string name;                  // Catalog
  std::optional<std::int64_t> arg;   // Catalog
  std::vector<std::int64_t> diag;    // Diag
  std::int64_t factor = 1;           // Scale factor or Power exponent
  std::vector<LatticeExpr> children;  // Sum parts; single operand of Scale/Power
};

LatticeExpr parse_lattice_expr(std::string_view text);
GramMatrix evaluate(const LatticeExpr& e);
std::string to_string(const LatticeExpr& e);

// parse_lattice_expr followed by evaluate.
GramMatrix parse_expr(std::string_view text);

}  // namespace lat

#endif  // LAT_EXPR_HPP
