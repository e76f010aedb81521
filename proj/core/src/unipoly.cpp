#include "sn/unipoly.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sn/errors.hpp"

namespace sn {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly(std::vector<Rational>{-r, 1}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && sn::is_zero(coeffs_.back())) coeffs_.pop_back();
}

std::optional<std::size_t> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("zero-input", "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a) { return a.scaled(-1); }

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sn::is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("division-by-zero", "polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const auto& bc = b.coefficients();
  std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) return {UniPoly(), a};
  std::vector<Rational> q(r.size() - db);
  Rational inv = 1 / bc.back();
  for (std::size_t k = r.size(); k-- > db;) {
    if (sn::is_zero(r[k])) continue;
    Rational c = r[k] * inv;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * bc[j];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

std::pair<UniPoly, Rational> uni_normalize_monic(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("zero-input", "zero input");
  Rational c = p.leading();
  return {p.scaled(1 / c), c};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return uni_normalize_monic(x).first;
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  UniPoly l = divmod(a * b, gcd(a, b)).quotient;
  return uni_normalize_monic(l).first;
}

UniPoly pow(const UniPoly& p, unsigned e) {
  UniPoly out = UniPoly::constant(1);
  for (unsigned k = 0; k < e; ++k) out = out * p;
  return out;
}

bool factor_order_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree_or_minus_one() != b.degree_or_minus_one()) return a.degree_or_minus_one() < b.degree_or_minus_one();
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  for (std::size_t k = 0; k < ac.size(); ++k) {
    if (ac[k] != bc[k]) return ac[k] < bc[k];
  }
  return false;
}

namespace {

using IntPoly = std::vector<Integer>;

// Primitive integer multiple of p with positive leading coefficient.
IntPoly primitive_part(const UniPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

UniPoly to_rational(const IntPoly& p) {
  std::vector<Rational> v(p.begin(), p.end());
  return UniPoly(std::move(v));
}

Integer eval_int(const IntPoly& p, const Integer& at) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::vector<Integer> positive_divisors(Integer m) {
  if (m < 0) m = -m;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Rational roots of an integer polynomial with nonzero constant term.
std::vector<Rational> rational_roots(const IntPoly& p) {
  std::vector<Rational> roots;
  auto num = positive_divisors(p.front());
  auto den = positive_divisors(p.back());
  UniPoly rp = to_rational(p);
  std::vector<Rational> seen;
  for (const auto& a : num) {
    for (const auto& b : den) {
      for (int s : {1, -1}) {
        Rational r(a * s, b);
        r.canonicalize();
        if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
        seen.push_back(r);
        if (sn::is_zero(rp.eval(r))) roots.push_back(r);
      }
    }
  }
  return roots;
}

// Integer polynomial with Newton coefficients c at nodes a.
IntPoly from_newton(const std::vector<Integer>& c, const std::vector<Integer>& a) {
  IntPoly out{c.back()};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    IntPoly next(out.size() + 1, Integer(0));
    for (std::size_t j = 0; j < out.size(); ++j) {
      next[j + 1] += out[j];
      next[j] -= a[k] * out[j];
    }
    next[0] += c[k];
    out = std::move(next);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// Searches for an integer factor of exact degree d of the primitive,
// squarefree polynomial f. Returns an empty vector when none exists.
IntPoly kronecker_factor(const IntPoly& f, std::size_t d) {
  // Interpolation nodes: those with the fewest divisors of f(a).
  std::vector<std::pair<std::size_t, Integer>> cands;
  for (long t = 0; t <= 20; ++t) {
    for (long a : {t, -t}) {
      if (t == 0 && !cands.empty()) continue;
      Integer v = eval_int(f, a);
      if (v == 0) continue;
      Integer av = abs(v);
      if (av > Integer("100000000000")) continue;
      cands.emplace_back(positive_divisors(av).size(), Integer(a));
    }
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  if (cands.size() < d + 1) throw DomainError("factor-failed", "not enough interpolation nodes");
  std::vector<Integer> nodes;
  std::vector<std::vector<Integer>> choices;
  for (std::size_t k = 0; k <= d; ++k) {
    nodes.push_back(cands[k].second);
    choices.push_back(positive_divisors(eval_int(f, nodes.back())));
  }
  const Integer& lc = f.back();
  std::vector<std::vector<Integer>> table(d + 1);
  IntPoly found;

  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k > d) {
      std::vector<Integer> c(d + 1);
      for (std::size_t j = 0; j <= d; ++j) c[j] = table[j][j];
      if (c[d] == 0) return false;
      IntPoly g = from_newton(c, nodes);
      if (g.size() != d + 1 || lc % g.back() != 0) return false;
      if (!divmod(to_rational(f), to_rational(g)).remainder.is_zero()) return false;
      found = std::move(g);
      return true;
    }
    for (const auto& mag : choices[k]) {
      for (int s : {1, -1}) {
        if (k == 0 && s < 0) continue;
        table[k].assign(k + 1, Integer(0));
        table[k][0] = mag * s;
        bool ok = true;
        for (std::size_t j = 1; j <= k && ok; ++j) {
          Integer num = table[k][j - 1] - table[k - 1][j - 1];
          Integer den = nodes[k] - nodes[k - j];
          if (num % den != 0) ok = false;
          else table[k][j] = num / den;
        }
        if (ok && search(k + 1)) return true;
      }
    }
    return false;
  };
  search(0);
  return found;
}

// Irreducible monic factors of a squarefree monic polynomial.
std::vector<UniPoly> factor_squarefree(const UniPoly& p) {
  std::vector<UniPoly> out;
  UniPoly rest = p;
  if (sn::is_zero(rest.coeff(0))) {
    out.push_back(UniPoly::linear_root(0));
    rest = divmod(rest, out.back()).quotient;
  }
  if (rest.is_constant()) return out;
  for (const auto& r : rational_roots(primitive_part(rest))) {
    out.push_back(UniPoly::linear_root(r));
    rest = divmod(rest, out.back()).quotient;
  }
  std::size_t d = 2;
  while (!rest.is_constant()) {
    std::size_t deg = *rest.degree();
    if (2 * d > deg) {
      out.push_back(uni_normalize_monic(rest).first);
      break;
    }
    IntPoly g = kronecker_factor(primitive_part(rest), d);
    if (g.empty()) {
      ++d;
      continue;
    }
    UniPoly gm = uni_normalize_monic(to_rational(g)).first;
    out.push_back(gm);
    rest = divmod(rest, gm).quotient;
  }
  return out;
}

}  // namespace

Factorization uni_factor(const UniPoly& p) {
  if (p.is_zero() || p.is_constant()) throw DomainError("scalar-input", "uni_factor requires a non-scalar polynomial");
  if (!p.is_monic()) throw DomainError("not-monic", "uni_factor requires a monic polynomial");
  if (*p.degree() > kMaxFactorDegree) {
    throw DomainError("degree-too-large", "uni_factor supports degree <= " + std::to_string(kMaxFactorDegree) +
                                               "; got degree " + std::to_string(*p.degree()));
  }
  // Squarefree decomposition (Yun).
  std::vector<std::pair<UniPoly, unsigned>> parts;
  UniPoly c = gcd(p, p.derivative());
  UniPoly w = divmod(p, c).quotient;
  unsigned mult = 1;
  while (!w.is_constant()) {
    UniPoly y = gcd(w, c);
    UniPoly z = divmod(w, y).quotient;
    if (!z.is_constant()) parts.emplace_back(uni_normalize_monic(z).first, mult);
    ++mult;
    w = y;
    c = divmod(c, y).quotient;
  }
  Factorization out;
  for (const auto& [sq, m] : parts) {
    for (auto& f : factor_squarefree(sq)) out.emplace_back(std::move(f), m);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return factor_order_less(a.first, b.first); });
  return out;
}

std::string to_string(const UniPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sn::is_zero(c[k])) continue;
    Rational a = c[k];
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += to_string(a);
      continue;
    }
    if (a != 1) out += to_string(a) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace sn
