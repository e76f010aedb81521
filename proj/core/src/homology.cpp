#include "sn/homology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "sn/decomposition.hpp"
#include "sn/errors.hpp"
#include "sn/laurent.hpp"
#include "sn/representations.hpp"

namespace sn {

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// Sector vectors of rank n and degree <= d, sorted.
std::vector<SectorVec> sector_vectors_up_to(int n, unsigned d) {
  std::vector<Sector> per;
  per.push_back(Sector::unit());
  for (unsigned e = 1; e <= d; ++e) {
    per.push_back(Sector::xpow(e));
    per.push_back(Sector::ypow(e));
  }
  for (unsigned i = 0; i + 2 <= d; ++i) {
    for (unsigned j = 0; i + j + 2 <= d; ++j) per.push_back(Sector::mat(i, j));
  }
  std::vector<SectorVec> out;
  SectorVec cur;
  std::function<void(unsigned)> rec = [&](unsigned budget) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (const auto& s : per) {
      if (s.degree() > budget) continue;
      cur.push_back(s);
      rec(budget - s.degree());
      cur.pop_back();
    }
  };
  rec(d);
  std::sort(out.begin(), out.end());
  return out;
}

std::string sector_tag(const SectorVec& sv) {
  std::string out;
  for (std::size_t k = 0; k < sv.size(); ++k) out += (k ? "|" : "") + to_string(sv[k]);
  return out;
}

}  // namespace

TruncatedComplex build_anres(int n, unsigned d) {
  if (n < 2 || n > 3) throw DomainError("out-of-range", "build_anres supports 2 <= n <= 3");
  if (d > 10) throw DomainError("out-of-range", "build_anres supports d <= 10");
  TruncatedComplex c;
  c.name = "anres";
  c.truncation = d;
  c.tag_diagonal = true;
  std::vector<SectorVec> all = sector_vectors_up_to(n, d);
  // index[s] maps (summand, sector vector) to a basis position of I_s.
  std::vector<std::map<std::pair<std::vector<int>, SectorVec>, std::size_t>> index(static_cast<std::size_t>(n) + 1);
  for (int s = n; s >= 0; --s) {
    std::vector<BasisLabel> labels;
    auto& idx = index[static_cast<std::size_t>(s)];
    auto add = [&](const std::vector<int>& comp, const SectorVec& sv) {
      idx.emplace(std::make_pair(comp, sv), labels.size());
      labels.push_back({comp, sector_tag(sv), sector_vector_degree(sv)});
    };
    if (s == 0) {
      for (const auto& sv : all) {
        if (std::any_of(sv.begin(), sv.end(), [](const Sector& x) { return x.is_mat(); })) add({}, sv);
      }
      c.space_names.push_back("a" + std::to_string(n));
    } else {
      for (const auto& T : subsets_of_size(n, s)) {
        for (const auto& sv : all) {
          bool in = std::all_of(T.begin(), T.end(), [&sv](int i) { return sv[static_cast<std::size_t>(i - 1)].is_mat(); });
          if (in) add(T, sv);
        }
      }
      c.space_names.push_back("I" + std::to_string(s));
    }
    c.spaces.push_back(std::move(labels));
    c.bounds.push_back(d);
  }
  for (int s = n; s >= 1; --s) {
    const auto& src = index[static_cast<std::size_t>(s)];
    const auto& dst = index[static_cast<std::size_t>(s - 1)];
    SparseMatrix m(dst.size(), src.size());
    for (const auto& [key, col] : src) {
      const auto& [T, sv] = key;
      if (s == 1) {
        m.add(dst.at({{}, sv}), col, 1);
        continue;
      }
      for (std::size_t t = 0; t < T.size(); ++t) {
        std::vector<int> face = T;
        face.erase(face.begin() + static_cast<long>(t));
        m.add(dst.at({face, sv}), col, (t % 2 == 0) ? -1 : 1);
      }
    }
    c.maps.push_back(std::move(m));
  }
  return c;
}

TruncatedComplex build_koszul_Mlambda(int n, const std::vector<Rational>& lambda, unsigned d) {
  if (n < 1 || n > 3) throw DomainError("out-of-range", "build_koszul_Mlambda supports 1 <= n <= 3");
  if (d > 10) throw DomainError("out-of-range", "build_koszul_Mlambda supports d <= 10");
  if (static_cast<int>(lambda.size()) != n) throw DomainError("rank-mismatch", "lambda must have n coordinates");
  TruncatedComplex c;
  c.name = "koszul";
  c.truncation = d;
  c.tag_diagonal = false;
  std::vector<std::map<std::pair<std::vector<int>, std::vector<unsigned>>, std::size_t>> index(static_cast<std::size_t>(n) + 1);
  for (int k = n; k >= 0; --k) {
    std::vector<BasisLabel> labels;
    unsigned bound = d >= static_cast<unsigned>(k) ? d - static_cast<unsigned>(k) : 0;
    if (d >= static_cast<unsigned>(k)) {
      std::vector<Monomial> mons = monomials_up_to(n, bound);
      for (const auto& I : subsets_of_size(n, k)) {
        for (const auto& m : mons) {
          index[static_cast<std::size_t>(k)].emplace(std::make_pair(I, m.exps), labels.size());
          labels.push_back({I, to_string(m), m.degree()});
        }
      }
    }
    c.space_names.push_back("K" + std::to_string(k));
    c.spaces.push_back(std::move(labels));
    c.bounds.push_back(bound);
  }
  for (int k = n; k >= 1; --k) {
    const auto& src = index[static_cast<std::size_t>(k)];
    const auto& dst = index[static_cast<std::size_t>(k - 1)];
    SparseMatrix mat(dst.size(), src.size());
    for (const auto& [key, col] : src) {
      const auto& [I, exps] = key;
      Monomial m;
      m.exps = exps;
      for (std::size_t t = 0; t < I.size(); ++t) {
        int i = I[t];
        std::vector<int> face = I;
        face.erase(face.begin() + static_cast<long>(t));
        Rational sign = (t % 2 == 0) ? 1 : -1;
        Element as = Element::monomial(m) * (Element::y(n, i) - Element::constant(n, lambda[static_cast<std::size_t>(i - 1)]));
        for (const auto& [mm, cc] : as.terms()) mat.add(dst.at({face, mm.exps}), col, sign * cc);
      }
    }
    c.maps.push_back(std::move(mat));
  }
  return c;
}

bool check_d_squared(const TruncatedComplex& c) {
  for (std::size_t k = 0; k + 1 < c.maps.size(); ++k) {
    if (!(c.maps[k + 1] * c.maps[k]).is_zero()) return false;
  }
  return true;
}

std::vector<ExactnessReport> check_tag_diagonal_exactness(const TruncatedComplex& c) {
  for (std::size_t k = 0; k < c.maps.size(); ++k) {
    const auto& m = c.maps[k];
    for (std::size_t r = 0; r < m.rows; ++r) {
      for (const auto& [col, v] : m.data[r]) {
        if (c.spaces[k + 1][r].tag != c.spaces[k][col].tag) {
          throw DomainError("not-tag-diagonal",
                            "map " + std::to_string(k) + " mixes tags; use check_windowed_exactness instead");
        }
      }
    }
  }
  std::vector<std::map<std::string, std::vector<std::size_t>>> by_tag(c.spaces.size());
  for (std::size_t k = 0; k < c.spaces.size(); ++k) {
    for (std::size_t i = 0; i < c.spaces[k].size(); ++i) by_tag[k][c.spaces[k][i].tag].push_back(i);
  }
  std::vector<std::size_t> ranks(c.maps.size(), 0);
  for (std::size_t k = 0; k < c.maps.size(); ++k) {
    for (const auto& [tag, cols] : by_tag[k]) {
      auto it = by_tag[k + 1].find(tag);
      if (it == by_tag[k + 1].end()) continue;
      const auto& rows = it->second;
      SparseMatrix sub(rows.size(), cols.size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) sub.add(r, j, c.maps[k].at(rows[r], cols[j]));
      }
      ranks[k] += rank(sub);
    }
  }
  std::vector<ExactnessReport> out;
  for (std::size_t k = 0; k < c.spaces.size(); ++k) {
    ExactnessReport r;
    r.position = k;
    r.dim = c.spaces[k].size();
    r.rank_in = k > 0 ? ranks[k - 1] : 0;
    r.rank_out = k < ranks.size() ? ranks[k] : 0;
    r.homology_dim = static_cast<long>(r.dim) - static_cast<long>(r.rank_in) - static_cast<long>(r.rank_out);
    out.push_back(r);
  }
  return out;
}

std::vector<ExactnessReport> check_windowed_exactness(const TruncatedComplex& c) {
  std::vector<std::size_t> ranks;
  for (const auto& m : c.maps) ranks.push_back(rank(m));
  auto near_boundary = [&c](std::size_t k) {
    if (k >= c.spaces.size()) return false;
    return std::any_of(c.spaces[k].begin(), c.spaces[k].end(),
                       [&](const BasisLabel& l) { return l.degree + 1 >= c.bounds[k]; });
  };
  std::vector<ExactnessReport> out;
  for (std::size_t k = 0; k < c.spaces.size(); ++k) {
    ExactnessReport r;
    r.position = k;
    r.dim = c.spaces[k].size();
    r.rank_in = k > 0 ? ranks[k - 1] : 0;
    r.rank_out = k < ranks.size() ? ranks[k] : 0;
    r.homology_dim = static_cast<long>(r.dim) - static_cast<long>(r.rank_in) - static_cast<long>(r.rank_out);
    r.window_caveat = !c.tag_diagonal && (near_boundary(k) || (k > 0 && near_boundary(k - 1)) || near_boundary(k + 1));
    out.push_back(r);
  }
  return out;
}

Element f_block_inverse(const Rational& lambda, const Element& g) {
  if (g.rank() != 1) throw DomainError("rank-mismatch", "f_block_inverse works in S_1");
  if (sn::is_zero(lambda)) throw DomainError("not-bijective", "not bijective: lambda must be nonzero");
  if (!(f_block_part(g, {1}) == to_decomposed(g))) throw DomainError("not-in-F", "input is not in F");
  Element y_over = Element::y(1, 1).scaled(1 / lambda);
  Element acc(1), term = g;
  while (!term.is_zero()) {
    acc += term;
    term = y_over * term;
  }
  Element f = acc.scaled(-1 / lambda);
  if (!((Element::y(1, 1) - Element::constant(1, lambda)) * f == g)) throw std::logic_error("f_block_inverse check failed");
  return f;
}

CokerResult coker_principal_left(const Rational& lambda, const Element& a) {
  if (a.rank() != 1) throw DomainError("rank-mismatch", "coker_principal_left works in S_1");
  if (sn::is_zero(lambda)) throw DomainError("not-bijective", "lambda must be nonzero");
  DecomposedElement d = to_decomposed(a);
  DecomposedElement fpart(1), lpart(1);
  for (const auto& [sv, c] : d.terms()) (sv[0].is_mat() ? fpart : lpart).add_term(sv, c);
  Element f = from_decomposed(fpart), ell = from_decomposed(lpart);
  LaurentElem pl = laurent_projection(ell);
  Rational scalar = pl.is_zero() ? Rational(0) : pl.eval({{1, 1 / lambda}});
  // pi(ell) - scalar = (x^{-1} - lambda) q in L_1.
  LaurentElem diff = pl - LaurentElem::constant({1}, scalar);
  Element qlift(1);
  if (!diff.is_zero()) {
    long lo = diff.terms().begin()->first[0];
    for (const auto& [e, c] : diff.terms()) lo = std::min(lo, e[0]);
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : diff.terms()) {
      std::size_t k = static_cast<std::size_t>(e[0] - lo);
      if (coeffs.size() <= k) coeffs.resize(k + 1);
      coeffs[k] = c;
    }
    DivMod dm = divmod(UniPoly(coeffs), UniPoly(std::vector<Rational>{1, -lambda}));
    if (!dm.remainder.is_zero()) throw std::logic_error("Laurent residue did not divide");
    const auto& qc = dm.quotient.coefficients();
    for (std::size_t k = 0; k < qc.size(); ++k) {
      long e = static_cast<long>(k) + lo + 1;
      Element mono = e >= 0 ? Element::x(1, 1, static_cast<unsigned>(e)) : Element::y(1, 1, static_cast<unsigned>(-e));
      qlift += mono.scaled(qc[k]);
    }
  }
  Element s = Element::y(1, 1) - Element::constant(1, lambda);
  Element fprime = f + ell - Element::constant(1, scalar) - s * qlift;
  Element cert = qlift + f_block_inverse(lambda, fprime);
  if (!(a - Element::constant(1, scalar) == s * cert)) throw std::logic_error("cokernel certificate check failed");
  return {scalar, cert};
}

namespace {

// Right multiples u*r for u over monomials of degree <= dom, as sparse rows
// indexed by target monomials.
void add_images(const Element& r, int n, unsigned dom, std::map<Monomial, std::size_t, GradedLex>& col,
                std::vector<SparseVec>& rows) {
  for (const auto& m : monomials_up_to(n, dom)) {
    Element img = Element::monomial(m) * r;
    SparseVec v;
    for (const auto& [t, c] : img.terms()) v.emplace(col.try_emplace(t, col.size()).first->second, c);
    if (!v.empty()) rows.push_back(std::move(v));
  }
}

std::size_t row_rank(const std::vector<SparseVec>& rows) { return rref_rows(rows).size(); }

}  // namespace

bool check_projective_split(SplitKind which, int n, unsigned d) {
  if (n < 1 || n > 3) throw DomainError("out-of-range", "check_projective_split supports 1 <= n <= 3");
  if (which == SplitKind::PnSummand) {
    // S_n = S_n E + sum_i S_n y_i with E = E_00 in every factor; spanning and
    // directness on the truncation.
    Element e = Element::one(n);
    for (int i = 1; i <= n; ++i) e = e * matrix_unit(n, i, 0, 0);
    std::map<Monomial, std::size_t, GradedLex> col;
    std::vector<SparseVec> a_rows, b_rows;
    add_images(e, n, d, col, a_rows);
    // Writing x^a through 1 = prod (E_00 + x_i y_i) needs multipliers of degree up to d + 2n - 1.
    for (int i = 1; i <= n; ++i) add_images(Element::y(n, i), n, d + 2 * static_cast<unsigned>(n) - 1, col, b_rows);
    std::size_t ra = row_rank(a_rows), rb = row_rank(b_rows);
    std::vector<SparseVec> all = a_rows;
    all.insert(all.end(), b_rows.begin(), b_rows.end());
    std::vector<SparseVec> span = rref_rows(all);
    if (span.size() != ra + rb) return false;
    // Each monomial of degree <= d lies in the span.
    for (const auto& m : monomials_up_to(n, d)) {
      std::vector<SparseVec> probe = span;
      probe.push_back({{col.try_emplace(m, col.size()).first->second, Rational(1)}});
      if (row_rank(probe) != span.size()) return false;
    }
    return true;
  }
  // Column summands S_n E_{0,alpha} and the map E_{kappa,alpha} -> x^kappa.
  std::vector<Element> gens;
  for (int i = 1; i <= n; ++i) {
    gens.push_back(Element::x(n, i));
    gens.push_back(Element::y(n, i));
  }
  std::vector<std::vector<unsigned>> alphas;
  for (const auto& m : monomials_up_to(n, 1)) {
    std::vector<unsigned> al(m.exps.begin(), m.exps.begin() + n);
    if (std::find(alphas.begin(), alphas.end(), al) == alphas.end()) alphas.push_back(al);
  }
  for (const auto& alpha : alphas) {
    for (const auto& km : monomials_up_to(n, d)) {
      std::vector<unsigned> kappa(km.exps.begin(), km.exps.begin() + n);
      if (std::any_of(km.exps.begin() + n, km.exps.end(), [](unsigned v) { return v != 0; })) continue;
      Element unit = matrix_unit(kappa, alpha);
      PolyVector image = PolyVector::monomial(kappa);
      for (const auto& g : gens) {
        // phi(g E) must equal g phi(E); g E is a combination of E_{kappa',alpha}.
        Element ge = g * unit;
        PolyVector lhs(n);
        DecomposedElement dec = to_decomposed(ge);
        for (const auto& [sv, c] : dec.terms()) {
          std::vector<unsigned> k2, a2;
          for (const auto& s : sv) {
            if (!s.is_mat()) return false;
            k2.push_back(s.i);
            a2.push_back(s.j);
          }
          if (a2 != alpha) return false;
          lhs.add_term(k2, c);
        }
        if (!(lhs == act_on_poly(g, image))) return false;
      }
      Element back = Element::one(n);
      for (int i = 0; i < n; ++i) back = back * Element::y(n, i + 1, kappa[static_cast<std::size_t>(i)]);
      // y^kappa E_{kappa,alpha} = E_{0,alpha}: the summand is cyclic on E_{0,alpha}.
      if (!(back * unit == matrix_unit(std::vector<unsigned>(static_cast<std::size_t>(n), 0), alpha))) return false;
    }
  }
  return true;
}

bool nonsplit_witness_F(int n, unsigned d) {
  if (n < 1 || n > 2) throw DomainError("out-of-range", "nonsplit_witness_F supports 1 <= n <= 2");
  // Unknown f over the basis of F_{<=d}.
  std::vector<SectorVec> basis;
  for (const auto& sv : sector_vectors_up_to(n, d)) {
    if (std::all_of(sv.begin(), sv.end(), [](const Sector& s) { return s.is_mat(); })) basis.push_back(sv);
  }
  std::vector<Element> fb;
  for (const auto& sv : basis) fb.push_back(sector_vector_element(sv));
  std::vector<std::vector<unsigned>> idx;
  std::vector<unsigned> cur(static_cast<std::size_t>(n), 0);
  while (true) {
    idx.push_back(cur);
    std::size_t k = 0;
    while (k < cur.size() && cur[k] == d) cur[k++] = 0;
    if (k == cur.size()) break;
    ++cur[k];
  }
  std::map<std::pair<std::size_t, std::vector<unsigned>>, std::size_t> row_of;
  std::size_t eq = 0;
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
  SparseVec b;
  for (const auto& i : idx) {
    for (const auto& j : idx) {
      Element e = matrix_unit(i, j);
      for (std::size_t c = 0; c < fb.size(); ++c) {
        Element prod = e * fb[c];
        for (const auto& [m, v] : prod.terms()) {
          auto r = row_of.try_emplace({eq, m.exps}, row_of.size()).first->second;
          entries.emplace_back(r, c, v);
        }
      }
      for (const auto& [m, v] : e.terms()) {
        auto r = row_of.try_emplace({eq, m.exps}, row_of.size()).first->second;
        b[r] += v;
      }
      ++eq;
    }
  }
  SparseMatrix a(row_of.size(), fb.size());
  for (const auto& [r, c, v] : entries) a.add(r, c, v);
  return !solve(a, b).has_value();
}

std::string to_triplets(const SparseMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (const auto& [c, v] : m.data[r]) {
      out += std::to_string(r) + " " + std::to_string(c) + " " + v.get_num().get_str() + "/" + v.get_den().get_str() + "\n";
    }
  }
  return out;
}

}  // namespace sn
