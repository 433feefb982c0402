#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "productring.hpp"

namespace grasscoh {

/// Syntax error with a 0-based input position.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

  private:
    std::size_t pos_;
};

/// AST over rational literals, c1..c9, u, s[...], +, -, *, ^, parentheses.
struct Expr {
    enum class Node { number, uvar, cvar, schur, add, sub, mul, pow, neg };
    Node kind = Node::number;
    Rational value;            // number
    int index = 0;             // cvar: 1..9; pow: exponent
    Partition partition;       // schur
    std::vector<std::unique_ptr<Expr>> children;

    std::string str() const;
};

/// Recursive-descent parser for:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := rational | 'u' | cvar | schur | '(' expr ')'
/// Whitespace is insignificant. Throws ParseError.
std::unique_ptr<Expr> parse_expr(const std::string& text);

/// Evaluate in the product ring. Throws std::invalid_argument on violations:
/// u-exponent above 1, a product of two classes both carrying u ("u^2 = 0 in
/// this ring"), c_i outside 1..k, or a Schubert index outside the box.
ProductClass elaborate(const Expr& e, const ProductContext& ctx);

/// Evaluate in the bare Grassmannian ring; u is rejected.
GrassClass elaborate_grass(const Expr& e, const RingContext& ctx);

}  // namespace grasscoh
