#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sn/rational.hpp"
#include "sn/unipoly.hpp"

namespace sn {

/// Exponent vectors of Laurent monomials, compared by total degree first and
/// then lexicographically.
struct LaurentOrder {
  bool operator()(const std::vector<long>& a, const std::vector<long>& b) const;
};

using Point = std::map<int, Rational>;

/// Laurent polynomial over Q in the variables x_i, i in vars() (1-based,
/// strictly increasing). Exponent vectors are indexed parallel to vars().
class LaurentElem {
 public:
  using Exponent = std::vector<long>;
  using TermMap = std::map<Exponent, Rational, LaurentOrder>;

  LaurentElem() = default;
  explicit LaurentElem(std::vector<int> vars);

  static LaurentElem constant(std::vector<int> vars, const Rational& c);
  static LaurentElem monomial(std::vector<int> vars, Exponent exps, const Rational& c);
  /// x_index^power inside the ring on vars.
  static LaurentElem variable(std::vector<int> vars, int index, long power = 1);
  /// Univariate polynomial p(x_index).
  static LaurentElem from_unipoly(const UniPoly& p, int index);

  const std::vector<int>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Position of x_index in vars(), or nullopt.
  std::optional<std::size_t> position(int index) const;

  void add_term(const Exponent& e, const Rational& c);

  /// Same element viewed in the ring on a superset of variables.
  LaurentElem extended(const std::vector<int>& vars) const;
  /// Drops variables that occur with exponent 0 in every term.
  LaurentElem trimmed() const;
  /// Variables that occur with a nonzero exponent somewhere.
  std::vector<int> support() const;

  /// Exact value at a point covering all variables; coordinates must be nonzero.
  Rational eval(const Point& point) const;
  /// Substitutes the coordinates present in `point`; the result lives on the
  /// remaining variables.
  LaurentElem substitute(const Point& point) const;

  /// Multiplies by the monomial unit making every minimal exponent 0.
  LaurentElem shifted_to_polynomial() const;

  /// Associate normal form: polynomial with all minimal exponents 0 and
  /// leading coefficient 1 (largest term in LaurentOrder). Zero stays zero.
  LaurentElem normalized() const;

  /// If this is a polynomial in x_index alone (after shifting), returns it.
  std::optional<UniPoly> as_unipoly(int index) const;

  friend LaurentElem operator+(const LaurentElem& a, const LaurentElem& b);
  friend LaurentElem operator-(const LaurentElem& a, const LaurentElem& b);
  friend LaurentElem operator-(const LaurentElem& a);
  friend LaurentElem operator*(const LaurentElem& a, const LaurentElem& b);
  LaurentElem scaled(const Rational& c) const;
  /// Equality after extending both sides to the union of their variables.
  friend bool operator==(const LaurentElem& a, const LaurentElem& b);

 private:
  std::vector<int> vars_;
  TermMap terms_;
};

std::vector<int> union_vars(const std::vector<int>& a, const std::vector<int>& b);

/// True iff g divides f in the Laurent ring (g nonzero).
bool laurent_divides(const LaurentElem& g, const LaurentElem& f);

/// Terms in ascending order; x_i^e prints as "x<i>^e" for e > 0 and
/// "y<i>^-e" for e < 0, so the text reparses through the S_n parser and the
/// Laurent projection.
std::string to_string(const LaurentElem& f);

}  // namespace sn
