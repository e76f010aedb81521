#include "sn/representations.hpp"

#include <algorithm>
#include <stdexcept>

#include "sn/errors.hpp"
#include "sn/linalg.hpp"
#include "sn/primes.hpp"

namespace sn {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!sn::is_zero(v[j])) out[i] += m[i][j] * v[j];
    }
  }
  return out;
}

std::optional<std::vector<Rational>> solve_dense(const Matrix& m, const std::vector<Rational>& b) {
  SparseMatrix a(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) a.add(i, j, m[i][j]);
  }
  SparseVec rhs;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!sn::is_zero(b[i])) rhs.emplace(i, b[i]);
  }
  auto x = solve(a, rhs);
  if (!x || rank(a) != m.size()) return std::nullopt;
  std::vector<Rational> out(m.size());
  for (const auto& [i, v] : *x) out[i] = v;
  return out;
}

Matrix inverse_matrix(const Matrix& m) {
  std::size_t k = m.size();
  Matrix inv(k, std::vector<Rational>(k));
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> e(k);
    e[j] = 1;
    auto col = solve_dense(m, e);
    if (!col) throw DomainError("not-invertible", "residue multiplication is not invertible");
    for (std::size_t i = 0; i < k; ++i) inv[i][j] = (*col)[i];
  }
  return inv;
}

}  // namespace

bool PolyOrder::operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
  unsigned da = 0, db = 0;
  for (unsigned e : a) da += e;
  for (unsigned e : b) db += e;
  if (da != db) return da < db;
  return a > b;
}

PolyVector PolyVector::monomial(std::vector<unsigned> exps, const Rational& c) {
  PolyVector p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

void PolyVector::add_term(const std::vector<unsigned>& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n) throw DomainError("rank-mismatch", "exponent length differs from rank");
  if (sn::is_zero(c)) return;
  auto [it, inserted] = terms.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sn::is_zero(it->second)) terms.erase(it);
  }
}

PolyVector act_on_poly(const Element& a, const PolyVector& p) {
  if (a.rank() != p.n) throw DomainError("rank-mismatch", "element and polynomial ranks differ");
  PolyVector out(p.n);
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [e, d] : p.terms) {
      std::vector<unsigned> r(e.size());
      bool zero = false;
      for (int i = 0; i < p.n && !zero; ++i) {
        std::size_t k = static_cast<std::size_t>(i);
        if (e[k] < m.beta(i)) zero = true;
        else r[k] = e[k] - m.beta(i) + m.alpha(i);
      }
      if (!zero) out.add_term(r, c * d);
    }
  }
  return out;
}

Element simplicity_witness(const PolyVector& p) {
  if (p.is_zero()) throw DomainError("zero-input", "simplicity witness of the zero vector");
  const auto& [top, c] = *p.terms.rbegin();
  Monomial m(p.n);
  for (int i = 0; i < p.n; ++i) m.beta(i) = top[static_cast<std::size_t>(i)];
  Element w = Element::monomial(m, 1 / c);
  if (!(act_on_poly(w, p) == PolyVector::monomial(std::vector<unsigned>(static_cast<std::size_t>(p.n), 0)))) {
    throw std::logic_error("simplicity witness failed to reach 1");
  }
  return w;
}

std::vector<int> SimpleModuleSpec::CN() const { return complement(n, N); }

SimpleModuleSpec make_module_spec(int n, std::vector<int> N, std::optional<UniPoly> g, Point point) {
  if (n < 1) throw DomainError("bad-rank", "rank must be at least 1");
  std::sort(N.begin(), N.end());
  N.erase(std::unique(N.begin(), N.end()), N.end());
  for (int i : N) {
    if (i < 1 || i > n) throw DomainError("index-out-of-range", "index " + std::to_string(i) + " out of range");
  }
  SimpleModuleSpec s{n, N, std::nullopt, {}};
  std::vector<int> cn = s.CN();
  if (g) {
    if (cn.size() != 1) throw DomainError("unsupported-module", "a polynomial maximal ideal needs |CN| = 1");
    if (!point.empty()) throw DomainError("bad-module", "give either a point or a polynomial, not both");
    UniPoly m = uni_normalize_monic(*g).first;
    if (m.is_constant()) throw DomainError("bad-module", "maximal ideal generator must be non-scalar");
    if (sn::is_zero(m.coeff(0))) throw DomainError("bad-module", "maximal ideal generator must satisfy g(0) != 0");
    auto f = uni_factor(m);
    if (f.size() != 1 || f[0].second != 1) throw DomainError("not-prime", "maximal ideal generator is reducible");
    if (*m.degree() == 1) {
      s.point.emplace(cn[0], -m.coeff(0));
    } else {
      s.g = m;
    }
    return s;
  }
  for (int c : cn) {
    auto it = point.find(c);
    if (it == point.end()) throw DomainError("bad-point", "point must give a coordinate for x" + std::to_string(c));
    if (sn::is_zero(it->second)) throw DomainError("not-in-torus", "point not in the torus");
  }
  if (point.size() != cn.size()) throw DomainError("bad-point", "point coordinates must be exactly the CN indices");
  s.point = std::move(point);
  return s;
}

SimpleModuleSpec polynomial_module(int n) {
  std::vector<int> all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  return make_module_spec(n, all, std::nullopt, {});
}

ResidueField::ResidueField(const SimpleModuleSpec& spec) : cn_(spec.CN()) {
  if (spec.g) {
    const UniPoly& g = *spec.g;
    dim_ = *g.degree();
    Matrix t(dim_, std::vector<Rational>(dim_));
    for (std::size_t j = 0; j + 1 < dim_; ++j) t[j + 1][j] = 1;
    for (std::size_t i = 0; i < dim_; ++i) t[i][dim_ - 1] = -g.coeff(i);
    int c = cn_.at(0);
    xinv_[c] = inverse_matrix(t);
    x_[c] = std::move(t);
    return;
  }
  dim_ = 1;
  for (int c : cn_) {
    const Rational& v = spec.point.at(c);
    x_[c] = Matrix{{v}};
    xinv_[c] = Matrix{{1 / v}};
  }
}

std::vector<Rational> ResidueField::multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  if (dim_ == 1) return {a[0] * b[0]};
  const Matrix& t = x_.begin()->second;
  std::vector<Rational> out(dim_), power = b;
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t i = 0; i < dim_; ++i) out[i] += a[j] * power[i];
    power = mat_vec(t, power);
  }
  return out;
}

std::vector<Rational> ResidueField::inverse(const std::vector<Rational>& a) const {
  Matrix m(dim_, std::vector<Rational>(dim_));
  for (std::size_t j = 0; j < dim_; ++j) {
    std::vector<Rational> e(dim_);
    e[j] = 1;
    auto col = multiply(a, e);
    for (std::size_t i = 0; i < dim_; ++i) m[i][j] = col[i];
  }
  std::vector<Rational> one(dim_);
  one[0] = 1;
  auto x = solve_dense(m, one);
  if (!x) throw DomainError("division-by-zero", "zero has no inverse in the residue field");
  return *x;
}

ModVector ModVector::generator(const SimpleModuleSpec& s) {
  ModVector v(s);
  v.add_term(std::vector<unsigned>(s.N.size(), 0), 0, 1);
  return v;
}

void ModVector::add_term(const std::vector<unsigned>& e, std::size_t r, const Rational& c) {
  if (sn::is_zero(c)) return;
  auto [it, inserted] = terms.emplace(std::make_pair(e, r), c);
  if (!inserted) {
    it->second += c;
    if (sn::is_zero(it->second)) terms.erase(it);
  }
}

namespace {

const ResidueField& field_of(const SimpleModuleSpec& spec) {
  thread_local std::vector<std::pair<SimpleModuleSpec, ResidueField>> cache;
  for (const auto& [s, f] : cache) {
    if (s == spec) return f;
  }
  if (cache.size() > 64) cache.clear();
  cache.emplace_back(spec, ResidueField(spec));
  return cache.back().second;
}

}  // namespace

ModVector act_on_module(const Element& a, const ModVector& v) {
  const SimpleModuleSpec& spec = v.spec;
  if (a.rank() != spec.n) throw DomainError("rank-mismatch", "element rank differs from the module rank");
  const ResidueField& field = field_of(spec);
  std::vector<int> cn = spec.CN();
  ModVector out(spec);
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [key, d] : v.terms) {
      const auto& [e, r] = key;
      std::vector<unsigned> ne(e.size());
      bool zero = false;
      for (std::size_t k = 0; k < spec.N.size() && !zero; ++k) {
        int i = spec.N[k] - 1;
        if (e[k] < m.beta(i)) zero = true;
        else ne[k] = e[k] - m.beta(i) + m.alpha(i);
      }
      if (zero) continue;
      std::vector<Rational> res(field.dim());
      res[r] = 1;
      for (int ci : cn) {
        for (unsigned s = 0; s < m.beta(ci - 1); ++s) res = mat_vec(field.xinv_matrix(ci), res);
        for (unsigned s = 0; s < m.alpha(ci - 1); ++s) res = mat_vec(field.x_matrix(ci), res);
      }
      for (std::size_t j = 0; j < res.size(); ++j) out.add_term(ne, j, c * d * res[j]);
    }
  }
  return out;
}

Element module_witness(const ModVector& v) {
  if (v.is_zero()) throw DomainError("zero-input", "simplicity witness of the zero vector");
  const SimpleModuleSpec& spec = v.spec;
  int n = spec.n;
  // Top N-part exponent in the polynomial order.
  std::vector<unsigned> top = v.terms.begin()->first.first;
  PolyOrder less;
  for (const auto& [key, c] : v.terms) {
    if (less(top, key.first)) top = key.first;
  }
  Monomial m(n);
  for (std::size_t k = 0; k < spec.N.size(); ++k) m.beta(spec.N[k] - 1) = top[k];
  Element down = Element::monomial(m);
  ModVector reduced = act_on_module(down, v);
  const ResidueField& field = field_of(spec);
  std::vector<Rational> rho(field.dim());
  for (const auto& [key, c] : reduced.terms) rho[key.second] += c;
  std::vector<Rational> inv = field.inverse(rho);
  Element lift(n);
  std::vector<int> cn = spec.CN();
  if (field.dim() == 1) {
    lift = Element::constant(n, inv[0]);
  } else {
    for (std::size_t j = 0; j < inv.size(); ++j) lift += Element::x(n, cn[0], static_cast<unsigned>(j)).scaled(inv[j]);
  }
  Element w = lift * down;
  if (!(act_on_module(w, v) == ModVector::generator(spec))) throw std::logic_error("module witness failed to reach 1");
  return w;
}

std::vector<std::size_t> module_hilbert(const SimpleModuleSpec& spec, unsigned i_max) {
  int n = spec.n;
  std::vector<Element> gens;
  for (int i = 1; i <= n; ++i) {
    gens.push_back(Element::x(n, i));
    gens.push_back(Element::y(n, i));
  }
  std::map<std::pair<std::vector<unsigned>, std::size_t>, std::size_t> index;
  std::vector<std::pair<std::vector<unsigned>, std::size_t>> keys;
  auto to_sparse = [&](const ModVector& v) {
    SparseVec s;
    for (const auto& [key, c] : v.terms) {
      auto [it, inserted] = index.emplace(key, keys.size());
      if (inserted) keys.push_back(key);
      s.emplace(it->second, c);
    }
    return s;
  };
  auto from_sparse = [&](const SparseVec& s) {
    ModVector v(spec);
    for (const auto& [col, c] : s) v.add_term(keys[col].first, keys[col].second, c);
    return v;
  };
  std::vector<SparseVec> basis{to_sparse(ModVector::generator(spec))};
  std::vector<std::size_t> dims{basis.size()};
  for (unsigned i = 1; i <= i_max; ++i) {
    std::vector<SparseVec> rows = basis;
    for (const auto& b : basis) {
      ModVector v = from_sparse(b);
      for (const auto& g : gens) {
        SparseVec s = to_sparse(act_on_module(g, v));
        if (!s.empty()) rows.push_back(std::move(s));
      }
    }
    basis = rref_rows(std::move(rows));
    dims.push_back(basis.size());
  }
  return dims;
}

unsigned default_hilbert_range(const SimpleModuleSpec& spec) {
  unsigned k = spec.g ? static_cast<unsigned>(*spec.g->degree()) : 1;
  return static_cast<unsigned>(spec.N.size()) + 2 * k + 4;
}

ModuleInvariants module_invariants(const SimpleModuleSpec& spec, unsigned i_max) {
  if (i_max == 0) i_max = default_hilbert_range(spec);
  ModuleInvariants out;
  out.gk = static_cast<unsigned>(spec.N.size());
  out.pd = static_cast<unsigned>(spec.CN().size());
  out.end_dim = static_cast<unsigned>(ResidueField(spec).dim());
  std::vector<long> h;
  for (auto d : module_hilbert(spec, i_max)) h.push_back(static_cast<long>(d));
  for (unsigned k = 0; k < out.gk; ++k) {
    std::vector<long> diff;
    for (std::size_t j = 1; j < h.size(); ++j) diff.push_back(h[j] - h[j - 1]);
    h = std::move(diff);
  }
  std::size_t tail = (i_max + 1) / 2;
  if (tail == 0 || h.size() < tail) {
    throw DomainError("hilbert-unstable", "Hilbert fit needs more samples; increase i_max");
  }
  for (std::size_t j = h.size() - tail; j < h.size(); ++j) {
    if (h[j] != h.back()) throw DomainError("hilbert-unstable", "Hilbert fit did not stabilize; increase i_max");
  }
  if (h.back() <= 0) throw DomainError("hilbert-unstable", "non-positive leading coefficient; increase i_max");
  out.mult = static_cast<unsigned>(h.back());
  return out;
}

IdealForm annihilator_of_simple(const SimpleModuleSpec& spec) {
  QData q = QZero{};
  if (spec.g) {
    q = QPrincipal{LaurentElem::from_unipoly(*spec.g, spec.CN().at(0))};
  } else if (!spec.point.empty()) {
    q = QPoint{spec.point};
  }
  return prime_ideal(make_prime(spec.n, spec.N, q));
}

namespace {

// Applies the monomial word x^alpha y^beta letter by letter; false if a Y
// hits e_0.
bool apply_word(const Monomial& m, std::vector<unsigned>& idx, unsigned D) {
  int n = m.rank();
  for (int i = 0; i < n; ++i) {
    for (unsigned s = 0; s < m.beta(i); ++s) {
      if (idx[static_cast<std::size_t>(i)] == 0) return false;
      --idx[static_cast<std::size_t>(i)];
    }
  }
  for (int i = 0; i < n; ++i) {
    for (unsigned s = 0; s < m.alpha(i); ++s) {
      if (++idx[static_cast<std::size_t>(i)] > D) throw std::logic_error("shift oracle left its truncation window");
    }
  }
  return true;
}

using BasisVec = std::map<std::vector<unsigned>, Rational>;

void apply_element(const Element& a, const BasisVec& v, unsigned D, BasisVec& out) {
  for (const auto& [idx, c] : v) {
    for (const auto& [m, d] : a.terms()) {
      std::vector<unsigned> j = idx;
      if (!apply_word(m, j, D)) continue;
      auto [it, inserted] = out.emplace(j, c * d);
      if (!inserted) {
        it->second += c * d;
        if (sn::is_zero(it->second)) out.erase(it);
      }
    }
  }
}

std::vector<unsigned> x_degrees(const Element& a) {
  std::vector<unsigned> out(static_cast<std::size_t>(a.rank()), 0);
  for (const auto& [m, c] : a.terms()) {
    for (int i = 0; i < a.rank(); ++i) out[static_cast<std::size_t>(i)] = std::max(out[static_cast<std::size_t>(i)], m.alpha(i));
  }
  return out;
}

}  // namespace

OracleReport shift_oracle_report(const TruncatedRep& rep, const Element& a, const Element& b) {
  check_rank(a, b);
  if (a.rank() != rep.n) throw DomainError("rank-mismatch", "element rank differs from the representation rank");
  std::vector<unsigned> da = x_degrees(a), db = x_degrees(b);
  std::vector<unsigned> bound(static_cast<std::size_t>(rep.n));
  for (std::size_t i = 0; i < bound.size(); ++i) {
    if (da[i] + db[i] > rep.D) throw DomainError("truncation-too-small", "truncation too small");
    bound[i] = rep.D - da[i] - db[i];
  }
  Element ab = a * b;
  OracleReport report;
  std::vector<unsigned> beta(bound.size(), 0);
  while (true) {
    BasisVec e{{beta, Rational(1)}};
    BasisVec lhs, mid, rhs;
    apply_element(ab, e, rep.D, lhs);
    apply_element(b, e, rep.D, mid);
    apply_element(a, mid, rep.D, rhs);
    ++report.checked;
    if (lhs != rhs) ++report.mismatches;
    std::size_t k = 0;
    while (k < beta.size() && beta[k] == bound[k]) beta[k++] = 0;
    if (k == beta.size()) break;
    ++beta[k];
  }
  report.ok = report.mismatches == 0;
  return report;
}

bool shift_oracle_check(const TruncatedRep& rep, const Element& a, const Element& b) {
  return shift_oracle_report(rep, a, b).ok;
}

}  // namespace sn
