#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sn/rational.hpp"

namespace sn {

/// Univariate polynomial over Q. Coefficients are stored dense, lowest degree
/// first, with no trailing zeros; the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);
  /// The polynomial x - r.
  static UniPoly linear_root(const Rational& r);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  /// Degree, or -1 for the zero polynomial.
  long degree_or_minus_one() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const;

  Rational eval(const Rational& at) const;
  UniPoly derivative() const;
  UniPoly scaled(const Rational& c) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Monic lcm; lcm(a, 0) = 0.
UniPoly lcm(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& p, unsigned e);

/// p = c * m with m monic. Throws DomainError("zero-input") on p = 0.
std::pair<UniPoly, Rational> uni_normalize_monic(const UniPoly& p);

using Factorization = std::vector<std::pair<UniPoly, unsigned>>;

/// Largest degree accepted by uni_factor.
inline constexpr std::size_t kMaxFactorDegree = 8;

/// Monic irreducible factors over Q with multiplicities, sorted by
/// (degree, coefficient vector low-to-high). Requires p monic, non-scalar,
/// degree <= kMaxFactorDegree.
Factorization uni_factor(const UniPoly& p);

/// Ordering used for factor lists: degree first, then coefficients
/// lexicographically from the constant term up.
bool factor_order_less(const UniPoly& a, const UniPoly& b);

/// Highest degree first, e.g. "x^2 - 3/2*x + 1".
std::string to_string(const UniPoly& p, std::string_view var = "x");

}  // namespace sn
