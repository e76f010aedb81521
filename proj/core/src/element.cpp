#include "sn/element.hpp"

#include <algorithm>
#include <functional>

#include "sn/errors.hpp"

namespace sn {

Monomial::Monomial(const std::vector<unsigned>& alpha, const std::vector<unsigned>& beta) {
  if (alpha.size() != beta.size()) throw DomainError("rank-mismatch", "alpha and beta lengths differ");
  exps = alpha;
  exps.insert(exps.end(), beta.begin(), beta.end());
}

Monomial Monomial::x(int n, int i, unsigned e) {
  if (i < 1 || i > n) throw DomainError("index-out-of-range", "generator index " + std::to_string(i) + " out of range");
  Monomial m(n);
  m.alpha(i - 1) = e;
  return m;
}

Monomial Monomial::y(int n, int i, unsigned e) {
  if (i < 1 || i > n) throw DomainError("index-out-of-range", "generator index " + std::to_string(i) + " out of range");
  Monomial m(n);
  m.beta(i - 1) = e;
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (unsigned e : exps) d += e;
  return d;
}

std::vector<long> Monomial::weight() const {
  std::vector<long> w(static_cast<std::size_t>(rank()));
  for (int i = 0; i < rank(); ++i) w[static_cast<std::size_t>(i)] = static_cast<long>(alpha(i)) - static_cast<long>(beta(i));
  return w;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exps > b.exps;
}

void check_rank(const Element& a, const Element& b) {
  if (a.rank() != b.rank()) {
    throw DomainError("rank-mismatch",
                      "rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  }
}

Element::Element(int n) : n_(n) {
  if (n < 1) throw DomainError("bad-rank", "rank must be at least 1");
}

Element Element::constant(int n, const Rational& c) {
  Element e(n);
  e.add_term(Monomial(n), c);
  return e;
}

Element Element::monomial(const Monomial& m, const Rational& c) {
  Element e(m.rank());
  e.add_term(m, c);
  return e;
}

Element Element::x(int n, int i, unsigned e) { return monomial(Monomial::x(n, i, e)); }
Element Element::y(int n, int i, unsigned e) { return monomial(Monomial::y(n, i, e)); }

Rational Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (m.rank() != n_) throw DomainError("rank-mismatch", "monomial rank differs from element rank");
  if (sn::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sn::is_zero(it->second)) terms_.erase(it);
  }
}

Element Element::scaled(const Rational& c) const {
  Element out(n_);
  if (sn::is_zero(c)) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * c);
  return out;
}

Element& Element::operator+=(const Element& o) {
  check_rank(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_rank(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

std::optional<Monomial> multiply_monomials(Flavor flavor, const Monomial& a, const Monomial& b) {
  int n = a.rank();
  Monomial out(n);
  for (int i = 0; i < n; ++i) {
    unsigned mid_y = a.beta(i), mid_x = b.alpha(i);
    if (flavor == Flavor::D) {
      if (mid_y > 0 && mid_x > 0) return std::nullopt;
      out.alpha(i) = a.alpha(i) + mid_x;
      out.beta(i) = b.beta(i) + mid_y;
    } else if (mid_y >= mid_x) {
      out.alpha(i) = a.alpha(i);
      out.beta(i) = b.beta(i) + (mid_y - mid_x);
    } else {
      out.alpha(i) = a.alpha(i) + (mid_x - mid_y);
      out.beta(i) = b.beta(i);
    }
  }
  return out;
}

Element multiply(const AlgebraContext& ctx, const Element& a, const Element& b) {
  check_rank(a, b);
  if (a.rank() != ctx.n) throw DomainError("rank-mismatch", "element rank differs from the algebra context");
  Element out(a.rank());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (auto m = multiply_monomials(ctx.flavor, ma, mb)) out.add_term(*m, ca * cb);
    }
  }
  return out;
}

Element operator*(const Element& a, const Element& b) { return multiply({a.rank(), Flavor::S}, a, b); }

Element power(const AlgebraContext& ctx, const Element& a, unsigned e) {
  Element out = Element::one(a.rank());
  for (unsigned k = 0; k < e; ++k) out = multiply(ctx, out, a);
  return out;
}

Element involution(const Element& a) {
  Element out(a.rank());
  int n = a.rank();
  for (const auto& [m, c] : a.terms()) {
    Monomial t(n);
    for (int i = 0; i < n; ++i) {
      t.alpha(i) = m.beta(i);
      t.beta(i) = m.alpha(i);
    }
    out.add_term(t, c);
  }
  return out;
}

std::optional<unsigned> filtration_degree(const Element& a) {
  if (a.is_zero()) return std::nullopt;
  return a.terms().rbegin()->first.degree();
}

namespace {

// Calls f on every exponent vector of length len with entry sum <= budget.
void for_each_bounded(std::vector<unsigned>& v, std::size_t pos, unsigned budget,
                      const std::function<void(const std::vector<unsigned>&)>& f) {
  if (pos == v.size()) {
    f(v);
    return;
  }
  for (unsigned e = 0; e <= budget; ++e) {
    v[pos] = e;
    for_each_bounded(v, pos + 1, budget - e, f);
  }
  v[pos] = 0;
}

}  // namespace

HilbertDim hilbert_dim(int n, unsigned i) {
  if (n < 1) throw DomainError("bad-rank", "rank must be at least 1");
  HilbertDim out;
  out.binomial = binomial(i + 2 * static_cast<unsigned>(n), 2 * static_cast<unsigned>(n));
  unsigned long count = 0;
  std::vector<unsigned> v(2 * static_cast<std::size_t>(n), 0);
  for_each_bounded(v, 0, i, [&count](const std::vector<unsigned>&) { ++count; });
  out.enumerated = Integer(count);
  return out;
}

std::vector<Monomial> monomials_up_to(int n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> v(2 * static_cast<std::size_t>(n), 0);
  for_each_bounded(v, 0, d, [&out](const std::vector<unsigned>& e) {
    Monomial m;
    m.exps = e;
    out.push_back(std::move(m));
  });
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

std::map<std::vector<long>, Element> zgrade_split(const Element& a) {
  std::map<std::vector<long>, Element> out;
  for (const auto& [m, c] : a.terms()) {
    auto it = out.try_emplace(m.weight(), a.rank()).first;
    it->second.add_term(m, c);
  }
  return out;
}

Element gr_symbol(const Element& a) {
  auto deg = filtration_degree(a);
  if (!deg) throw DomainError("zero-input", "gr_symbol of the zero element");
  Element out(a.rank());
  for (const auto& [m, c] : a.terms()) {
    if (m.degree() == *deg) out.add_term(m, c);
  }
  return out;
}

std::string to_string(const Monomial& m) {
  std::string out;
  int n = m.rank();
  auto gen = [&out](char letter, int i, unsigned e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += letter + std::to_string(i + 1) + "^" + std::to_string(e);
  };
  for (int i = 0; i < n; ++i) gen('x', i, m.alpha(i));
  for (int i = 0; i < n; ++i) gen('y', i, m.beta(i));
  return out.empty() ? "1" : out;
}

std::string to_string(const Element& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : a.terms()) {
    Rational v = c;
    bool neg = sgn(v) < 0;
    if (neg) v = -v;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += to_string(v);
    if (m.degree() > 0) out += "*" + to_string(m);
  }
  return out;
}

}  // namespace sn
