#pragma once

// Expression front end shared by the CLI and the tests.
//
//   expr   := term (('+' | '-') term)*
//   term   := ['-'] factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := rational | ident | '(' expr ')'
//
// Rational literals are "n" or "n/d". Identifiers must be declared by the
// caller's context; operator symbols (d1.., X) parse like any other factor
// and are given meaning by the evaluator.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/errors.hpp"
#include "weylkit/polynomial.hpp"
#include "weylkit/rational.hpp"

namespace weylkit {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, Span span);
  Span span() const { return span_; }

 private:
  Span span_;
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Number, Symbol, Add, Mul, Neg, Pow };
  Kind kind = Kind::Number;
  Rational value;                // Number
  std::string name;              // Symbol
  unsigned exponent = 0;         // Pow
  std::vector<ExprPtr> children; // Add, Mul: n-ary; Neg, Pow: one child
  Span span;
};

ExprPtr parse_expr(std::string_view text, const std::vector<std::string>& declared);
/// Splits on top-level commas and parses each piece.
std::vector<ExprPtr> parse_expr_list(std::string_view text, const std::vector<std::string>& declared);
std::string print_expr(const ExprNode& node);

/// Structural fold: `leaf` maps Number/Symbol nodes to T, `mul` multiplies.
/// T must provide +, unary - and copy.
template <typename T, typename Leaf, typename Mul>
T fold_expr(const ExprNode& node, const Leaf& leaf, const Mul& mul) {
  switch (node.kind) {
    case ExprNode::Kind::Number:
    case ExprNode::Kind::Symbol:
      return leaf(node);
    case ExprNode::Kind::Neg:
      return -fold_expr<T>(*node.children[0], leaf, mul);
    case ExprNode::Kind::Add: {
      T acc = fold_expr<T>(*node.children[0], leaf, mul);
      for (std::size_t i = 1; i < node.children.size(); ++i) acc = acc + fold_expr<T>(*node.children[i], leaf, mul);
      return acc;
    }
    case ExprNode::Kind::Mul: {
      T acc = fold_expr<T>(*node.children[0], leaf, mul);
      for (std::size_t i = 1; i < node.children.size(); ++i) acc = mul(acc, fold_expr<T>(*node.children[i], leaf, mul));
      return acc;
    }
    case ExprNode::Kind::Pow:
    default: {
      const T base = fold_expr<T>(*node.children[0], leaf, mul);
      ExprNode one;
      one.kind = ExprNode::Kind::Number;
      one.value = Rational(1);
      T acc = leaf(one);
      for (unsigned k = 0; k < node.exponent; ++k) acc = mul(acc, base);
      return acc;
    }
  }
}

/// Evaluates into a polynomial ring; every symbol must be a ring variable.
Poly evaluate_poly(const ExprNode& node, const PolyRing& ring);
Poly parse_poly(std::string_view text, const PolyRing& ring);
std::vector<Poly> parse_poly_list(std::string_view text, const PolyRing& ring);

}  // namespace weylkit
