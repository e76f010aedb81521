#include "sn/laurent.hpp"

#include <algorithm>
#include <numeric>

#include "sn/errors.hpp"

namespace sn {

bool LaurentOrder::operator()(const std::vector<long>& a, const std::vector<long>& b) const {
  long sa = std::accumulate(a.begin(), a.end(), 0L);
  long sb = std::accumulate(b.begin(), b.end(), 0L);
  if (sa != sb) return sa < sb;
  return a < b;
}

std::vector<int> union_vars(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LaurentElem::LaurentElem(std::vector<int> vars) : vars_(std::move(vars)) {
  if (!std::is_sorted(vars_.begin(), vars_.end()) ||
      std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end()) {
    throw DomainError("bad-variables", "Laurent variables must be strictly increasing");
  }
  for (int v : vars_) {
    if (v < 1) throw DomainError("bad-variables", "Laurent variable indices start at 1");
  }
}

LaurentElem LaurentElem::constant(std::vector<int> vars, const Rational& c) {
  LaurentElem out(std::move(vars));
  out.add_term(Exponent(out.vars_.size(), 0), c);
  return out;
}

LaurentElem LaurentElem::monomial(std::vector<int> vars, Exponent exps, const Rational& c) {
  LaurentElem out(std::move(vars));
  if (exps.size() != out.vars_.size()) throw DomainError("rank-mismatch", "exponent length does not match variables");
  out.add_term(exps, c);
  return out;
}

LaurentElem LaurentElem::variable(std::vector<int> vars, int index, long power) {
  LaurentElem out(std::move(vars));
  auto pos = out.position(index);
  if (!pos) throw DomainError("bad-variables", "x" + std::to_string(index) + " is not a ring variable");
  Exponent e(out.vars_.size(), 0);
  e[*pos] = power;
  out.add_term(e, 1);
  return out;
}

LaurentElem LaurentElem::from_unipoly(const UniPoly& p, int index) {
  LaurentElem out(std::vector<int>{index});
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) out.add_term(Exponent{static_cast<long>(k)}, c[k]);
  return out;
}

bool LaurentElem::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](long v) { return v == 0; });
}

std::optional<std::size_t> LaurentElem::position(int index) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), index);
  if (it == vars_.end() || *it != index) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

void LaurentElem::add_term(const Exponent& e, const Rational& c) {
  if (sn::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sn::is_zero(it->second)) terms_.erase(it);
  }
}

LaurentElem LaurentElem::extended(const std::vector<int>& vars) const {
  if (vars == vars_) return *this;
  LaurentElem out(vars);
  std::vector<std::size_t> where;
  for (int v : vars_) {
    auto pos = out.position(v);
    if (!pos) throw DomainError("bad-variables", "extension must contain all variables");
    where.push_back(*pos);
  }
  for (const auto& [e, c] : terms_) {
    Exponent f(vars.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) f[where[k]] = e[k];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::vector<int> LaurentElem::support() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    bool used = std::any_of(terms_.begin(), terms_.end(), [k](const auto& t) { return t.first[k] != 0; });
    if (used) out.push_back(vars_[k]);
  }
  return out;
}

LaurentElem LaurentElem::trimmed() const {
  std::vector<int> keep = support();
  LaurentElem out(keep);
  for (const auto& [e, c] : terms_) {
    Exponent f;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      if (std::binary_search(keep.begin(), keep.end(), vars_[k])) f.push_back(e[k]);
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Rational LaurentElem::eval(const Point& point) const {
  for (int v : vars_) {
    auto it = point.find(v);
    if (it == point.end()) throw DomainError("bad-point", "point does not cover x" + std::to_string(v));
  }
  for (const auto& [idx, val] : point) {
    if (sn::is_zero(val)) throw DomainError("not-in-torus", "point not in the torus");
  }
  LaurentElem s = substitute(point);
  return s.is_zero() ? Rational(0) : s.terms_.begin()->second;
}

LaurentElem LaurentElem::substitute(const Point& point) const {
  std::vector<int> rest;
  std::vector<const Rational*> value(vars_.size(), nullptr);
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    auto it = point.find(vars_[k]);
    if (it == point.end()) {
      rest.push_back(vars_[k]);
    } else {
      if (sn::is_zero(it->second)) throw DomainError("not-in-torus", "point not in the torus");
      value[k] = &it->second;
    }
  }
  LaurentElem out(rest);
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    Exponent f;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      if (value[k]) coeff *= pow(*value[k], e[k]);
      else f.push_back(e[k]);
    }
    out.add_term(f, coeff);
  }
  return out;
}

LaurentElem LaurentElem::shifted_to_polynomial() const {
  if (terms_.empty()) return *this;
  Exponent lo = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t k = 0; k < e.size(); ++k) lo[k] = std::min(lo[k], e[k]);
  }
  LaurentElem out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t k = 0; k < f.size(); ++k) f[k] -= lo[k];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

LaurentElem LaurentElem::normalized() const {
  if (terms_.empty()) return *this;
  LaurentElem s = shifted_to_polynomial();
  return s.scaled(1 / s.terms_.rbegin()->second);
}

std::optional<UniPoly> LaurentElem::as_unipoly(int index) const {
  auto pos = position(index);
  LaurentElem s = shifted_to_polynomial();
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : s.terms_) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      if ((!pos || k != *pos) && e[k] != 0) return std::nullopt;
    }
    std::size_t deg = pos ? static_cast<std::size_t>(e[*pos]) : 0;
    if (coeffs.size() <= deg) coeffs.resize(deg + 1);
    coeffs[deg] += c;
  }
  return UniPoly(std::move(coeffs));
}

LaurentElem operator+(const LaurentElem& a, const LaurentElem& b) {
  std::vector<int> vars = union_vars(a.vars_, b.vars_);
  LaurentElem out = a.extended(vars);
  LaurentElem bb = b.extended(vars);
  for (const auto& [e, c] : bb.terms_) out.add_term(e, c);
  return out;
}

LaurentElem operator-(const LaurentElem& a) { return a.scaled(-1); }

LaurentElem operator-(const LaurentElem& a, const LaurentElem& b) { return a + (-b); }

LaurentElem operator*(const LaurentElem& a, const LaurentElem& b) {
  std::vector<int> vars = union_vars(a.vars_, b.vars_);
  LaurentElem aa = a.extended(vars);
  LaurentElem bb = b.extended(vars);
  LaurentElem out(vars);
  for (const auto& [ea, ca] : aa.terms_) {
    for (const auto& [eb, cb] : bb.terms_) {
      LaurentElem::Exponent e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentElem LaurentElem::scaled(const Rational& c) const {
  LaurentElem out(vars_);
  if (sn::is_zero(c)) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

bool operator==(const LaurentElem& a, const LaurentElem& b) {
  std::vector<int> vars = union_vars(a.vars_, b.vars_);
  return a.extended(vars).terms_ == b.extended(vars).terms_;
}

bool laurent_divides(const LaurentElem& g, const LaurentElem& f) {
  if (g.is_zero()) throw DomainError("division-by-zero", "divisibility by the zero Laurent polynomial");
  if (f.is_zero()) return true;
  std::vector<int> vars = union_vars(g.vars(), f.vars());
  LaurentElem gg = g.extended(vars).shifted_to_polynomial();
  LaurentElem rest = f.extended(vars).shifted_to_polynomial();
  const auto& [lt, lc] = *gg.terms().rbegin();
  while (!rest.is_zero()) {
    const auto& [ft, fc] = *rest.terms().rbegin();
    LaurentElem::Exponent q = ft;
    for (std::size_t k = 0; k < q.size(); ++k) {
      q[k] -= lt[k];
      if (q[k] < 0) return false;
    }
    rest = rest - LaurentElem::monomial(vars, q, fc / lc) * gg;
  }
  return true;
}

std::string to_string(const LaurentElem& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    Rational a = c;
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += to_string(a);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] > 0) out += "*x" + std::to_string(f.vars()[k]) + "^" + std::to_string(e[k]);
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] < 0) out += "*y" + std::to_string(f.vars()[k]) + "^" + std::to_string(-e[k]);
    }
  }
  return out;
}

}  // namespace sn
