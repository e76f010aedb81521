#include "sn/cli/parser.hpp"

#include <cctype>

#include "sn/decomposition.hpp"
#include "sn/errors.hpp"

namespace sn::cli {

namespace {

constexpr unsigned kMaxPower = 256;

class Parser {
 public:
  Parser(std::string_view src, int n, int bare) : src_(src), n_(n), bare_(bare) {}

  std::unique_ptr<ExprNode> parse() {
    skip();
    if (pos_ == src_.size()) fail("empty expression");
    auto e = expr();
    skip();
    if (pos_ != src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw DomainError("syntax-error", "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  unsigned uint_value(const std::string& d, unsigned limit, const char* what) {
    if (d.size() > 9 || std::stoul(d) > limit) fail(std::string(what) + " too large");
    return static_cast<unsigned>(std::stoul(d));
  }

  std::unique_ptr<ExprNode> expr() {
    auto node = std::make_unique<ExprNode>();
    node->kind = ExprNode::Kind::Sum;
    node->signs.push_back(1);
    node->children.push_back(term());
    while (true) {
      if (eat('+')) {
        node->signs.push_back(1);
      } else if (eat('-')) {
        node->signs.push_back(-1);
      } else {
        break;
      }
      node->children.push_back(term());
    }
    if (node->children.size() == 1) return std::move(node->children[0]);
    return node;
  }

  std::unique_ptr<ExprNode> term() {
    auto node = std::make_unique<ExprNode>();
    node->kind = ExprNode::Kind::Product;
    node->children.push_back(factor());
    while (eat('*')) node->children.push_back(factor());
    if (node->children.size() == 1) return std::move(node->children[0]);
    return node;
  }

  std::unique_ptr<ExprNode> factor() {
    if (eat('-')) {
      auto node = std::make_unique<ExprNode>();
      node->kind = ExprNode::Kind::Negation;
      node->children.push_back(factor());
      return node;
    }
    auto a = atom();
    if (eat('^')) {
      skip();
      std::string d = digits();
      if (d.empty()) fail("expected exponent after '^'");
      auto node = std::make_unique<ExprNode>();
      node->kind = ExprNode::Kind::Power;
      node->exponent = uint_value(d, kMaxPower, "exponent");
      node->children.push_back(std::move(a));
      return node;
    }
    return a;
  }

  std::unique_ptr<ExprNode> atom() {
    skip();
    if (pos_ == src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    auto node = std::make_unique<ExprNode>();
    if (c == '(') {
      ++pos_;
      node = expr();
      if (!eat(')')) fail("expected ')'");
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text = digits();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty()) fail("expected denominator");
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        text += "/" + den;
      }
      node->kind = ExprNode::Kind::Scalar;
      node->value = parse_rational(text);
      return node;
    }
    if (c == 'x' || c == 'y') {
      std::size_t at = pos_++;
      std::string d = digits();
      int index = bare_;
      if (!d.empty()) {
        index = static_cast<int>(uint_value(d, 1000000, "index"));
      } else if (bare_ == 0) {
        fail(std::string("expected index after '") + c + "'");
      }
      if (index < 1 || index > n_) {
        pos_ = at;
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at; ++i) {
          if (src_[i] == '\n') {
            ++line;
            col = 1;
          } else {
            ++col;
          }
        }
        throw DomainError("index-out-of-range", "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                                    ": generator index " + std::to_string(index) +
                                                    " outside 1.." + std::to_string(n_));
      }
      node->kind = ExprNode::Kind::Generator;
      node->gen = c;
      node->index = index;
      return node;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  int n_;
  int bare_;
  std::size_t pos_ = 0;
};

Element eval_node(const ExprNode& node, const AlgebraContext& ctx) {
  switch (node.kind) {
    case ExprNode::Kind::Scalar:
      return Element::constant(ctx.n, node.value);
    case ExprNode::Kind::Generator:
      return node.gen == 'x' ? Element::x(ctx.n, node.index) : Element::y(ctx.n, node.index);
    case ExprNode::Kind::Negation:
      return -eval_node(*node.children[0], ctx);
    case ExprNode::Kind::Power:
      return power(ctx, eval_node(*node.children[0], ctx), node.exponent);
    case ExprNode::Kind::Product: {
      Element acc = eval_node(*node.children[0], ctx);
      for (std::size_t k = 1; k < node.children.size(); ++k) acc = multiply(ctx, acc, eval_node(*node.children[k], ctx));
      return acc;
    }
    case ExprNode::Kind::Sum: {
      Element acc(ctx.n);
      for (std::size_t k = 0; k < node.children.size(); ++k) {
        Element t = eval_node(*node.children[k], ctx);
        if (node.signs[k] < 0) {
          acc -= t;
        } else {
          acc += t;
        }
      }
      return acc;
    }
  }
  return Element(ctx.n);
}

}  // namespace

ExprAst parse_expr(std::string_view src, int n, int bare_index) {
  if (n < 1) throw DomainError("rank-mismatch", "rank must be at least 1");
  ExprAst ast;
  ast.n = n;
  ast.root = Parser(src, n, bare_index).parse();
  return ast;
}

Element eval_expr(const ExprAst& ast, const AlgebraContext& ctx) {
  if (ast.n != ctx.n) throw DomainError("rank-mismatch", "expression rank differs from context rank");
  return eval_node(*ast.root, ctx);
}

Element parse_element(std::string_view src, const AlgebraContext& ctx) { return eval_expr(parse_expr(src, ctx.n), ctx); }

UniPoly parse_unipoly(std::string_view src, int var) {
  AlgebraContext ctx{var, Flavor::S};
  Element e = eval_expr(parse_expr(src, var, var), ctx);
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : e.terms()) {
    for (int i = 0; i < var; ++i) {
      if (m.beta(i) != 0 || (i + 1 != var && m.alpha(i) != 0)) {
        throw DomainError("not-polynomial", "expected a polynomial in x" + std::to_string(var));
      }
    }
    std::size_t k = m.alpha(var - 1);
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] += c;
  }
  return UniPoly(coeffs);
}

LaurentElem parse_laurent(std::string_view src, int n) {
  return laurent_projection(parse_element(src, AlgebraContext{n, Flavor::S}));
}

}  // namespace sn::cli
