#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sn/element.hpp"
#include "sn/laurent.hpp"
#include "sn/unipoly.hpp"

namespace sn::cli {

struct ExprNode {
  enum class Kind { Sum, Product, Power, Negation, Scalar, Generator };
  Kind kind = Kind::Scalar;
  /// Sum: one sign per child (+1 or -1).
  std::vector<int> signs;
  std::vector<std::unique_ptr<ExprNode>> children;
  Rational value;
  char gen = 'x';
  int index = 1;
  unsigned exponent = 1;
};

struct ExprAst {
  int n = 1;
  std::unique_ptr<ExprNode> root;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom ('^' uint)?
///   atom   := rational | 'x'uint | 'y'uint | '(' expr ')'
/// Syntax errors raise DomainError("syntax-error") with line and column.
/// When `bare_index` is nonzero a bare 'x' or 'y' means index `bare_index`.
ExprAst parse_expr(std::string_view src, int n, int bare_index = 0);

Element eval_expr(const ExprAst& ast, const AlgebraContext& ctx);

/// parse_expr followed by eval_expr.
Element parse_element(std::string_view src, const AlgebraContext& ctx);

/// Polynomial in one variable written with x or x<var>.
UniPoly parse_unipoly(std::string_view src, int var = 1);

/// Laurent polynomial on 1..n; y<i> stands for x<i>^-1, so the output of
/// to_string(LaurentElem) reparses.
LaurentElem parse_laurent(std::string_view src, int n);

}  // namespace sn::cli
