#include "sn/decomposition.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "sn/errors.hpp"
#include "sn/linalg.hpp"

namespace sn {

Sector Sector::xpow(unsigned e) {
  if (e == 0) throw DomainError("bad-sector", "XPow exponent must be positive");
  return {Kind::XPow, e, 0};
}

Sector Sector::ypow(unsigned e) {
  if (e == 0) throw DomainError("bad-sector", "YPow exponent must be positive");
  return {Kind::YPow, e, 0};
}

unsigned Sector::degree() const {
  switch (kind) {
    case Kind::Unit: return 0;
    case Kind::XPow:
    case Kind::YPow: return i;
    case Kind::MatUnit: return i + j + 2;
  }
  return 0;
}

void DecomposedElement::add_term(const SectorVec& s, const Rational& c) {
  if (static_cast<int>(s.size()) != n_) throw DomainError("rank-mismatch", "sector vector length differs from rank");
  if (sn::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (sn::is_zero(it->second)) terms_.erase(it);
  }
}

std::vector<std::pair<Sector, Rational>> expand_factor(unsigned a, unsigned b) {
  std::vector<std::pair<Sector, Rational>> out;
  if (a >= b) {
    out.emplace_back(a == b ? Sector::unit() : Sector::xpow(a - b), 1);
    for (unsigned k = 0; k < b; ++k) out.emplace_back(Sector::mat(a - b + k, k), -1);
  } else {
    out.emplace_back(Sector::ypow(b - a), 1);
    for (unsigned k = 0; k < a; ++k) out.emplace_back(Sector::mat(k, k + b - a), -1);
  }
  return out;
}

Element sector_element(const Sector& s) {
  switch (s.kind) {
    case Sector::Kind::Unit: return Element::one(1);
    case Sector::Kind::XPow: return Element::x(1, 1, s.i);
    case Sector::Kind::YPow: return Element::y(1, 1, s.i);
    case Sector::Kind::MatUnit: return matrix_unit(1, 1, s.i, s.j);
  }
  return Element(1);
}

Element sector_vector_element(const SectorVec& s) {
  int n = static_cast<int>(s.size());
  Element out = Element::one(n);
  for (int f = 0; f < n; ++f) out = out * embed(sector_element(s[static_cast<std::size_t>(f)]), n, {f + 1});
  return out;
}

unsigned sector_vector_degree(const SectorVec& s) {
  unsigned d = 0;
  for (const auto& x : s) d += x.degree();
  return d;
}

Element embed(const Element& a, int n, const std::vector<int>& positions) {
  int m = a.rank();
  if (static_cast<int>(positions.size()) != m) throw DomainError("rank-mismatch", "embedding needs one position per factor");
  for (int p : positions) {
    if (p < 1 || p > n) throw DomainError("index-out-of-range", "factor " + std::to_string(p) + " out of range");
  }
  Element out(n);
  for (const auto& [mon, c] : a.terms()) {
    Monomial t(n);
    for (int k = 0; k < m; ++k) {
      t.alpha(positions[static_cast<std::size_t>(k)] - 1) = mon.alpha(k);
      t.beta(positions[static_cast<std::size_t>(k)] - 1) = mon.beta(k);
    }
    out.add_term(t, c);
  }
  return out;
}

Element matrix_unit(int n, int factor, unsigned i, unsigned j) {
  if (factor < 1 || factor > n) {
    throw DomainError("index-out-of-range", "factor " + std::to_string(factor) + " out of range 1.." + std::to_string(n));
  }
  Element out(n);
  Monomial a(n), b(n);
  a.alpha(factor - 1) = i;
  a.beta(factor - 1) = j;
  b.alpha(factor - 1) = i + 1;
  b.beta(factor - 1) = j + 1;
  out.add_term(a, 1);
  out.add_term(b, -1);
  return out;
}

Element matrix_unit(const std::vector<unsigned>& alpha, const std::vector<unsigned>& beta) {
  if (alpha.size() != beta.size() || alpha.empty()) throw DomainError("rank-mismatch", "matrix unit index lengths differ");
  int n = static_cast<int>(alpha.size());
  Element out = Element::one(n);
  for (int f = 0; f < n; ++f) out = out * matrix_unit(n, f + 1, alpha[static_cast<std::size_t>(f)], beta[static_cast<std::size_t>(f)]);
  return out;
}

namespace {

using Expansion = std::vector<std::pair<SectorVec, Rational>>;

class ExpansionCache {
 public:
  Expansion get(const Monomial& m) {
    {
      std::shared_lock lock(mu_);
      auto it = cache_.find(m);
      if (it != cache_.end()) return it->second;
    }
    Expansion e = compute(m);
    std::unique_lock lock(mu_);
    if (cache_.size() > kLimit) cache_.clear();
    cache_.emplace(m, e);
    return e;
  }

 private:
  static constexpr std::size_t kLimit = 1 << 18;

  static Expansion compute(const Monomial& m) {
    Expansion acc{{SectorVec{}, Rational(1)}};
    for (int f = 0; f < m.rank(); ++f) {
      auto parts = expand_factor(m.alpha(f), m.beta(f));
      Expansion next;
      next.reserve(acc.size() * parts.size());
      for (const auto& [sv, c] : acc) {
        for (const auto& [s, d] : parts) {
          SectorVec v = sv;
          v.push_back(s);
          next.emplace_back(std::move(v), c * d);
        }
      }
      acc = std::move(next);
    }
    return acc;
  }

  std::shared_mutex mu_;
  std::map<Monomial, Expansion, GradedLex> cache_;
};

ExpansionCache& expansion_cache() {
  static ExpansionCache cache;
  return cache;
}

}  // namespace

DecomposedElement to_decomposed(const Element& a) {
  DecomposedElement out(a.rank());
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [sv, d] : expansion_cache().get(m)) out.add_term(sv, c * d);
  }
  return out;
}

Element from_decomposed(const DecomposedElement& d) {
  Element out(d.rank());
  for (const auto& [sv, c] : d.terms()) out += sector_vector_element(sv).scaled(c);
  return out;
}

bool matrix_unit_product_check(const std::vector<unsigned>& alpha, const std::vector<unsigned>& beta,
                               const std::vector<unsigned>& gamma, const std::vector<unsigned>& rho) {
  Element lhs = matrix_unit(alpha, beta) * matrix_unit(gamma, rho);
  Element rhs = beta == gamma ? matrix_unit(alpha, rho) : Element(static_cast<int>(alpha.size()));
  return lhs == rhs;
}

LaurentElem laurent_projection(const Element& a) {
  std::vector<int> vars;
  for (int i = 1; i <= a.rank(); ++i) vars.push_back(i);
  LaurentElem out(vars);
  for (const auto& [m, c] : a.terms()) out.add_term(m.weight(), c);
  return out;
}

DecomposedElement f_block_part(const Element& a, const std::vector<int>& subset) {
  for (int i : subset) {
    if (i < 1 || i > a.rank()) throw DomainError("index-out-of-range", "index " + std::to_string(i) + " out of range");
  }
  DecomposedElement full = to_decomposed(a);
  DecomposedElement out(a.rank());
  for (const auto& [sv, c] : full.terms()) {
    bool keep = std::all_of(subset.begin(), subset.end(),
                            [&sv](int i) { return sv[static_cast<std::size_t>(i - 1)].is_mat(); });
    if (keep) out.add_term(sv, c);
  }
  return out;
}

SliceCoefficients extract_slice_coefficients(const Element& a, int factor) {
  int n = a.rank();
  if (n < 2) throw DomainError("no-complementary-factor", "no complementary factor");
  if (factor < 1 || factor > n) throw DomainError("index-out-of-range", "factor " + std::to_string(factor) + " out of range");
  SliceCoefficients out{Element(n - 1), {}, {}, {}};
  auto slot = [n](auto& map, const auto& key) -> Element& { return map.try_emplace(key, n - 1).first->second; };
  for (const auto& [m, c] : a.terms()) {
    Monomial rest(n - 1);
    for (int k = 0, r = 0; k < n; ++k) {
      if (k == factor - 1) continue;
      rest.alpha(r) = m.alpha(k);
      rest.beta(r) = m.beta(k);
      ++r;
    }
    for (const auto& [s, d] : expand_factor(m.alpha(factor - 1), m.beta(factor - 1))) {
      switch (s.kind) {
        case Sector::Kind::Unit: out.lambda.add_term(rest, c * d); break;
        case Sector::Kind::XPow: slot(out.lambda_plus, s.i).add_term(rest, c * d); break;
        case Sector::Kind::YPow: slot(out.lambda_minus, s.i).add_term(rest, c * d); break;
        case Sector::Kind::MatUnit: slot(out.lambda_mat, std::make_pair(s.i, s.j)).add_term(rest, c * d); break;
      }
    }
  }
  std::erase_if(out.lambda_plus, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(out.lambda_minus, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(out.lambda_mat, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Element assemble_slice_coefficients(const SliceCoefficients& s, int factor, int n) {
  std::vector<int> rest_pos;
  for (int k = 1; k <= n; ++k) {
    if (k != factor) rest_pos.push_back(k);
  }
  auto place = [&](const Element& left, const Element& coeff) {
    return embed(left, n, {factor}) * embed(coeff, n, rest_pos);
  };
  Element out = place(Element::one(1), s.lambda);
  for (const auto& [i, c] : s.lambda_plus) out += place(Element::x(1, 1, i), c);
  for (const auto& [i, c] : s.lambda_minus) out += place(Element::y(1, 1, i), c);
  for (const auto& [ij, c] : s.lambda_mat) out += place(matrix_unit(1, 1, ij.first, ij.second), c);
  return out;
}

namespace {

// Kernel of a linear map on S_{n,<=d} given per basis monomial.
template <class F>
std::vector<Element> kernel_slice(int n, unsigned d, F image) {
  std::vector<Monomial> basis = monomials_up_to(n, d);
  std::map<Monomial, std::size_t, GradedLex> row_of;
  std::vector<Element> images;
  for (const auto& m : basis) {
    images.push_back(image(Element::monomial(m)));
    for (const auto& [t, c] : images.back().terms()) row_of.try_emplace(t, row_of.size());
  }
  SparseMatrix a(row_of.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (const auto& [t, c] : images[col].terms()) a.add(row_of.at(t), col, c);
  }
  std::vector<Element> out;
  for (const auto& v : nullspace(a)) {
    Element e(n);
    for (const auto& [col, c] : v) e.add_term(basis[col], c);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<Element> left_annihilator_slice(const Element& g, unsigned d) {
  return kernel_slice(g.rank(), d, [&g](const Element& a) { return a * g; });
}

std::vector<Element> centralizer_slice(const Element& g, unsigned d) {
  return kernel_slice(g.rank(), d, [&g](const Element& a) { return a * g - g * a; });
}

std::string to_string(const Sector& s) {
  switch (s.kind) {
    case Sector::Kind::Unit: return "1";
    case Sector::Kind::XPow: return "x^" + std::to_string(s.i);
    case Sector::Kind::YPow: return "y^" + std::to_string(s.i);
    case Sector::Kind::MatUnit: return "E(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
  }
  return "?";
}

std::string to_string(const DecomposedElement& d) {
  if (d.is_zero()) return "0";
  std::string out;
  for (const auto& [sv, c] : d.terms()) {
    Rational v = c;
    bool neg = sgn(v) < 0;
    if (neg) v = -v;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += to_string(v) + "*[";
    for (std::size_t k = 0; k < sv.size(); ++k) {
      if (k) out += " | ";
      out += to_string(sv[k]);
    }
    out += "]";
  }
  return out;
}

}  // namespace sn
