#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sn/rational.hpp"

namespace sn {

enum class Flavor { S, D };

/// Rank and product rule: S uses y_i x_i = 1, D uses y_i x_i = 0.
struct AlgebraContext {
  int n = 1;
  Flavor flavor = Flavor::S;
};

/// x^alpha y^beta, stored as one vector (alpha_1..alpha_n, beta_1..beta_n).
struct Monomial {
  std::vector<unsigned> exps;

  Monomial() = default;
  explicit Monomial(int n) : exps(2 * static_cast<std::size_t>(n), 0) {}
  Monomial(const std::vector<unsigned>& alpha, const std::vector<unsigned>& beta);

  static Monomial x(int n, int i, unsigned e = 1);
  static Monomial y(int n, int i, unsigned e = 1);

  int rank() const { return static_cast<int>(exps.size() / 2); }
  /// 0-based factor index.
  unsigned alpha(int i) const { return exps[static_cast<std::size_t>(i)]; }
  unsigned beta(int i) const { return exps[static_cast<std::size_t>(i + rank())]; }
  unsigned& alpha(int i) { return exps[static_cast<std::size_t>(i)]; }
  unsigned& beta(int i) { return exps[static_cast<std::size_t>(i + rank())]; }
  unsigned degree() const;
  std::vector<long> weight() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: smaller total degree first; within a degree the
/// lexicographically larger exponent vector comes first (x1 < x2 < y1 < y2).
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Element {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLex>;

  explicit Element(int n = 1);
  static Element constant(int n, const Rational& c);
  static Element one(int n) { return constant(n, 1); }
  static Element monomial(const Monomial& m, const Rational& c = 1);
  /// x_i^e, 1-based factor index.
  static Element x(int n, int i, unsigned e = 1);
  static Element y(int n, int i, unsigned e = 1);

  int rank() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);
  Element scaled(const Rational& c) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(const Element& a) { return a.scaled(-1); }
  /// Product in S_n.
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element&, const Element&) = default;

 private:
  int n_;
  TermMap terms_;
};

/// Product of basis monomials; nullopt when it vanishes (flavor D only).
std::optional<Monomial> multiply_monomials(Flavor flavor, const Monomial& a, const Monomial& b);

/// Normal-form product. Throws DomainError("rank-mismatch").
Element multiply(const AlgebraContext& ctx, const Element& a, const Element& b);
Element power(const AlgebraContext& ctx, const Element& a, unsigned e);

/// The anti-automorphism x_i <-> y_i: x^a y^b -> x^b y^a.
Element involution(const Element& a);

/// Max total degree of a term; nullopt for zero.
std::optional<unsigned> filtration_degree(const Element& a);

struct HilbertDim {
  Integer binomial;
  Integer enumerated;
};
/// dim S_{n,<=i}: the closed form and an explicit count of monomials.
HilbertDim hilbert_dim(int n, unsigned i);

/// All monomials of rank n with total degree <= d in GradedLex order.
std::vector<Monomial> monomials_up_to(int n, unsigned d);

/// Terms grouped by Z^n weight alpha - beta.
std::map<std::vector<long>, Element> zgrade_split(const Element& a);

/// Top filtration-degree slice of a (an element of D_n). Throws on zero.
Element gr_symbol(const Element& a);

/// Canonical text, e.g. "1 - 1*x1^1*y1^1".
std::string to_string(const Element& a);
std::string to_string(const Monomial& m);

void check_rank(const Element& a, const Element& b);

}  // namespace sn
