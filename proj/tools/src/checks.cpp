#include "sn/cli/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "sn/cli/random.hpp"
#include "sn/decomposition.hpp"
#include "sn/errors.hpp"
#include "sn/homology.hpp"
#include "sn/ideals.hpp"
#include "sn/linalg.hpp"
#include "sn/primes.hpp"
#include "sn/representations.hpp"

namespace sn::cli {

namespace {

class Report {
 public:
  explicit Report(std::string tag) { r_.tag = std::move(tag); }

  void line(std::string s) { r_.lines.push_back(std::move(s)); }

  void expect(bool ok, const std::string& what) {
    line(std::string(ok ? "ok   " : "FAIL ") + what);
    if (!ok) r_.passed = false;
  }

  CheckResult finish() {
    line(std::string("result: ") + (r_.passed ? "PASS" : "FAIL"));
    return r_;
  }

 private:
  CheckResult r_;
};

std::string frac(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

using Family = std::vector<std::vector<int>>;

Family sorted_family(Family f) {
  for (auto& s : f) std::sort(s.begin(), s.end());
  std::sort(f.begin(), f.end());
  return f;
}

Family antichain_of(const IdealForm& I) {
  if (std::holds_alternative<IdealZero>(I.v)) return {};
  if (std::holds_alternative<IdealWhole>(I.v)) {
    std::vector<int> all;
    for (int i = 1; i <= I.n; ++i) all.push_back(i);
    return {all};
  }
  if (const auto* id = std::get_if<Idempotent>(&I.v)) return sorted_family(id->antichain);
  throw std::logic_error("not an idempotent form: " + to_string(I));
}

std::vector<int> full(int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1U << i)) s.push_back(i + 1);
    }
    out.push_back(s);
  }
  return out;
}

Integer choose(unsigned long m, unsigned long k) {
  Integer r = 1;
  for (unsigned long j = 1; j <= k; ++j) {
    r *= m - k + j;
    r /= j;
  }
  return r;
}

// E_ij = x^i y^j - x^{i+1} y^{j+1} written out directly.
Element unit_by_definition(unsigned i, unsigned j) {
  return Element::monomial(Monomial(std::vector<unsigned>{i}, std::vector<unsigned>{j})) -
         Element::monomial(Monomial(std::vector<unsigned>{i + 1}, std::vector<unsigned>{j + 1}));
}

Element random_f_element(Rng& rng, unsigned max_index, unsigned terms) {
  Element f(1);
  long k = rng.range(1, terms);
  for (long t = 0; t < k; ++t) {
    long c = 0;
    while (c == 0) c = rng.range(-3, 3);
    f += matrix_unit(1, 1, static_cast<unsigned>(rng.range(0, max_index)), static_cast<unsigned>(rng.range(0, max_index)))
             .scaled(c);
  }
  return f;
}

// Element of I_C: S_1 on a random support of C, F on the other factors.
Element random_member(Rng& rng, const IdealForm& I) {
  Family c = antichain_of(I);
  const auto& s = c[static_cast<std::size_t>(rng.range(0, static_cast<long>(c.size()) - 1))];
  Element out = Element::one(I.n);
  for (int f = 1; f <= I.n; ++f) {
    Element part = std::binary_search(s.begin(), s.end(), f) ? rng.element(1, 2, 2) : random_f_element(rng, 2, 2);
    out = out * embed(part, I.n, {f});
  }
  return out;
}

// Coordinates of a list of elements in a shared monomial index.
std::vector<SparseVec> coordinates(const std::vector<Element>& elems, std::map<std::vector<unsigned>, std::size_t>& col) {
  std::vector<SparseVec> rows;
  for (const auto& e : elems) {
    SparseVec v;
    for (const auto& [m, c] : e.terms()) v.emplace(col.try_emplace(m.exps, col.size()).first->second, c);
    rows.push_back(std::move(v));
  }
  return rows;
}

bool same_span(const std::vector<Element>& a, const std::vector<Element>& b) {
  std::map<std::vector<unsigned>, std::size_t> col;
  auto ra = coordinates(a, col);
  auto rb = coordinates(b, col);
  std::size_t na = rref_rows(ra).size(), nb = rref_rows(rb).size();
  ra.insert(ra.end(), rb.begin(), rb.end());
  return na == a.size() && na == nb && rref_rows(ra).size() == na;
}

UniPoly poly_of_maximal(const PrimeDescriptor& p) {
  if (const auto* pt = std::get_if<QPoint>(&p.q)) return UniPoly::linear_root(pt->coords.begin()->second);
  return *std::get<QPrincipal>(p.q).g.as_unipoly(1);
}

// ---------------------------------------------------------------------------

CheckResult hilbert_function(std::uint64_t, bool quick) {
  Report rep("hilbert-function");
  int nmax = quick ? 2 : 4;
  unsigned imax = quick ? 6 : 12;
  for (int n = 1; n <= nmax; ++n) {
    // ways[s]: exponent vectors of length 2n with sum s.
    std::vector<Integer> ways(imax + 1, 0);
    ways[0] = 1;
    for (int k = 0; k < 2 * n; ++k) {
      for (unsigned s = 1; s <= imax; ++s) ways[s] += ways[s - 1];
    }
    Integer cum = 0;
    std::size_t agree = 0;
    for (unsigned i = 0; i <= imax; ++i) {
      cum += ways[i];
      HilbertDim h = hilbert_dim(n, i);
      if (h.binomial == cum && h.enumerated == cum && cum == choose(i + 2U * static_cast<unsigned>(n), 2U * static_cast<unsigned>(n))) {
        ++agree;
      }
    }
    rep.expect(agree == imax + 1, "n=" + std::to_string(n) + " i=0.." + std::to_string(imax) +
                                      ": closed form = enumeration = independent count " + frac(agree, imax + 1));
  }
  return rep.finish();
}

CheckResult shift_oracle(std::uint64_t seed, bool quick) {
  Report rep("shift-oracle");
  Rng rng(seed);
  std::size_t pairs = quick ? 200 : 10000, ok = 0, checked = 0, mismatches = 0;
  for (std::size_t t = 0; t < pairs; ++t) {
    int n = static_cast<int>(rng.range(1, 3));
    Element a = Element::monomial(rng.monomial(n, 5));
    Element b = Element::monomial(rng.monomial(n, 5));
    OracleReport r = shift_oracle_report(TruncatedRep{n, 12}, a, b);
    if (r.ok) ++ok;
    checked += r.checked;
    mismatches += r.mismatches;
  }
  rep.expect(ok == pairs && mismatches == 0,
             "random monomial pairs, n<=3, exponents<=5, D=12: " + frac(ok, pairs) + " agree, " +
                 std::to_string(checked) + " basis vectors compared, " + std::to_string(mismatches) + " mismatches");
  return rep.finish();
}

CheckResult matrix_units(std::uint64_t, bool quick) {
  Report rep("matrix-units");
  unsigned m = quick ? 4 : 8;
  std::size_t ok = 0, total = 0;
  for (unsigned i = 0; i <= m; ++i) {
    for (unsigned j = 0; j <= m; ++j) {
      ++total;
      if (matrix_unit(1, 1, i, j) == unit_by_definition(i, j)) ++ok;
    }
  }
  rep.expect(ok == total, "E_ij agrees with x^i y^j - x^(i+1) y^(j+1) for i,j<=" + std::to_string(m) + ": " + frac(ok, total));

  ok = total = 0;
  for (unsigned i = 0; i <= m; ++i) {
    for (unsigned j = 0; j <= m; ++j) {
      for (unsigned k = 0; k <= m; ++k) {
        for (unsigned l = 0; l <= m; ++l) {
          ++total;
          Element want = j == k ? unit_by_definition(i, l) : Element(1);
          if (unit_by_definition(i, j) * unit_by_definition(k, l) == want) ++ok;
        }
      }
    }
  }
  rep.expect(ok == total, "n=1 E_ij E_kl = delta_jk E_il, indices<=" + std::to_string(m) + ": " + frac(ok, total));

  unsigned r = quick ? 1 : 3;
  std::vector<std::vector<unsigned>> idx;
  for (unsigned a = 0; a <= r; ++a) {
    for (unsigned b = 0; b <= r; ++b) idx.push_back({a, b});
  }
  ok = total = 0;
  for (const auto& al : idx) {
    for (const auto& be : idx) {
      Element left = matrix_unit(al, be);
      for (const auto& ga : idx) {
        for (const auto& rh : idx) {
          ++total;
          Element want = be == ga ? matrix_unit(al, rh) : Element(2);
          if (matrix_unit_product_check(al, be, ga, rh) && left * matrix_unit(ga, rh) == want) ++ok;
        }
      }
    }
  }
  rep.expect(ok == total, "n=2 E_ab E_cd = delta_bc E_ad, multi-indices in {0.." + std::to_string(r) + "}^2: " + frac(ok, total));

  ok = total = 0;
  Element x = Element::x(1, 1), y = Element::y(1, 1);
  for (unsigned i = 0; i <= m; ++i) {
    for (unsigned j = 0; j <= m; ++j) {
      Element e = unit_by_definition(i, j);
      total += 5;
      if (x * e == unit_by_definition(i + 1, j)) ++ok;
      if (e * y == unit_by_definition(i, j + 1)) ++ok;
      if (y * e == (i ? unit_by_definition(i - 1, j) : Element(1))) ++ok;
      if (e * x == (j ? unit_by_definition(i, j - 1) : Element(1))) ++ok;
      if (involution(matrix_unit(1, 1, i, j)) == unit_by_definition(j, i)) ++ok;
    }
  }
  rep.expect(ok == total, "shift relations xE, Ey, yE, Ex and eta(E_ij) = E_ji, indices<=" + std::to_string(m) + ": " +
                              frac(ok, total));
  return rep.finish();
}

CheckResult ideal_commutativity(std::uint64_t seed, bool quick) {
  Report rep("ideal-commutativity");
  Rng rng(seed);
  auto ideals = enumerate_idempotent_ideals(3);
  std::size_t ok = 0, total = 0;
  for (const auto& I : ideals) {
    for (const auto& J : ideals) {
      ++total;
      if (ideal_product(I, J) == ideal_product(J, I)) ++ok;
    }
  }
  rep.expect(ok == total && total == 400, "n=3 idempotent pairs IJ = JI: " + frac(ok, total));

  std::size_t s1 = quick ? 40 : 200;
  ok = 0;
  for (std::size_t t = 0; t < s1; ++t) {
    IdealForm I = s1_ideal(rng.monic_unit_free(4, 3)), J = s1_ideal(rng.monic_unit_free(4, 3));
    if (ideal_product(I, J) == ideal_product(J, I)) ++ok;
  }
  rep.expect(ok == s1, "random S_1 pairs F + a(K[x]+K[y]): IJ = JI " + frac(ok, s1));

  std::vector<IdealForm> nonzero;
  for (const auto& I : ideals) {
    if (!std::holds_alternative<IdealZero>(I.v)) nonzero.push_back(I);
  }
  std::size_t trials = quick ? 100 : 1000;
  ok = 0;
  std::size_t rejects = 0, proper = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const IdealForm& I = nonzero[static_cast<std::size_t>(rng.range(0, static_cast<long>(nonzero.size()) - 1))];
    const IdealForm& J = nonzero[static_cast<std::size_t>(rng.range(0, static_cast<long>(nonzero.size()) - 1))];
    Element u = random_member(rng, I), v = random_member(rng, J);
    Element r1 = rng.element(3, 2, 2), r2 = rng.element(3, 2, 2);
    Element uv = u * v;
    bool coherent = ideal_membership(I, r1 * u * r2) && ideal_membership(J, v) &&
                    ideal_membership(ideal_product(I, J), uv) && ideal_membership(ideal_product(J, I), uv) &&
                    ideal_membership(ideal_intersection(I, J), uv) && ideal_membership(ideal_sum(I, J), u + v);
    if (coherent) ++ok;
    if (!std::holds_alternative<IdealWhole>(I.v)) {
      ++proper;
      if (!ideal_membership(I, Element::one(3))) ++rejects;
    }
  }
  rep.expect(ok == trials, "membership of random products in I, J, IJ, JI, I cap J, I + J: " + frac(ok, trials));
  rep.expect(rejects == proper, "1 lies in no proper ideal: " + frac(rejects, proper));
  return rep.finish();
}

CheckResult idempotent_lattice(std::uint64_t, bool quick) {
  Report rep("idempotent-lattice");
  const long expected[] = {3, 6, 20, 168, 7581, 7828354};
  int nmax = quick ? 4 : 5;
  for (int n = 1; n <= nmax; ++n) {
    auto L = enumerate_idempotent_ideals(n);
    bool ok = static_cast<long>(L.size()) == expected[n - 1] && count_idempotent_ideals(n) == expected[n - 1];
    rep.expect(ok, "n=" + std::to_string(n) + ": " + std::to_string(L.size()) + " idempotent ideals (expected " +
                       std::to_string(expected[n - 1]) + ")");
  }
  if (!quick) {
    Integer c6 = count_idempotent_ideals(6);
    rep.expect(c6 == expected[5], "n=6 count: " + sn::to_string(c6));
  }
  for (int n = 1; n <= 3; ++n) {
    auto subsets = all_subsets(n);
    std::set<Family> naive;
    std::size_t families = std::size_t{1} << subsets.size();
    for (std::size_t mask = 0; mask < families; ++mask) {
      Family f;
      for (std::size_t k = 0; k < subsets.size(); ++k) {
        if (mask & (std::size_t{1} << k)) f.push_back(subsets[k]);
      }
      bool antichain = true;
      for (std::size_t a = 0; a < f.size() && antichain; ++a) {
        for (std::size_t b = 0; b < f.size() && antichain; ++b) {
          if (a != b && std::includes(f[b].begin(), f[b].end(), f[a].begin(), f[a].end())) antichain = false;
        }
      }
      if (antichain) naive.insert(sorted_family(f));
    }
    std::set<Family> listed;
    for (const auto& I : enumerate_idempotent_ideals(n)) listed.insert(antichain_of(I));
    rep.expect(naive == listed, "n=" + std::to_string(n) + ": naive scan of " + std::to_string(families) +
                                    " families finds the same " + std::to_string(naive.size()) + " antichains");
  }
  return rep.finish();
}

CheckResult s1_factorization(std::uint64_t seed, bool quick) {
  Report rep("s1-factorization");
  Rng rng(seed);
  std::size_t trials = quick ? 40 : 200, ok = 0, sorted = 0, stable = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    UniPoly a = rng.monic_unit_free(6, 4);
    IdealForm I = s1_ideal(a);
    auto fac = s1_factor_into_maximals(I);
    UniPoly prod = UniPoly::constant(1);
    IdealForm back = whole_ideal(1);
    for (const auto& [p, m] : fac) {
      prod = prod * pow(poly_of_maximal(p), m);
      for (unsigned k = 0; k < m; ++k) back = ideal_product(back, prime_ideal(p));
    }
    if (prod == a && back == I) ++ok;
    bool strict = true;
    for (std::size_t k = 1; k < fac.size(); ++k) {
      if (!factor_order_less(poly_of_maximal(fac[k - 1].first), poly_of_maximal(fac[k].first))) strict = false;
    }
    if (strict) ++sorted;
    if (s1_factor_into_maximals(I) == fac) ++stable;
  }
  rep.expect(ok == trials, "random monic a, deg<=6, a(0)!=0: product of factors = a and of maximals = I " + frac(ok, trials));
  rep.expect(sorted == trials && stable == trials,
             "factor lists strictly sorted " + frac(sorted, trials) + ", repeatable " + frac(stable, trials));

  const std::vector<UniPoly> gs = {UniPoly::linear_root(1), UniPoly::linear_root(-2),
                                   UniPoly(std::vector<Rational>{1, 0, 1}), UniPoly(std::vector<Rational>{-2, 0, 1}),
                                   UniPoly::linear_root(3)};
  auto ideal_of = [&gs](const std::vector<unsigned>& e) {
    UniPoly a = UniPoly::constant(1);
    for (std::size_t k = 0; k < gs.size(); ++k) a = a * pow(gs[k], e[k]);
    return s1_ideal(a);
  };
  std::size_t laws = 0, vectors = quick ? 40 : 200;
  for (std::size_t t = 0; t < vectors; ++t) {
    std::vector<unsigned> e(gs.size()), f(gs.size()), lo(gs.size()), hi(gs.size()), sum(gs.size());
    bool e_ge_f = true;
    for (std::size_t k = 0; k < gs.size(); ++k) {
      e[k] = static_cast<unsigned>(rng.range(0, 3));
      f[k] = static_cast<unsigned>(rng.range(0, 3));
      lo[k] = std::min(e[k], f[k]);
      hi[k] = std::max(e[k], f[k]);
      sum[k] = e[k] + f[k];
      if (e[k] < f[k]) e_ge_f = false;
    }
    IdealForm I = ideal_of(e), J = ideal_of(f);
    bool ok_laws = ideal_sum(I, J) == ideal_of(lo) && ideal_intersection(I, J) == ideal_of(hi) &&
                   ideal_product(I, J) == ideal_of(sum) && ideal_contains(I, J) == e_ge_f;
    if (ok_laws) ++laws;
  }
  rep.expect(laws == vectors, "multiplicity vectors: sum = min, cap = max, product = add, containment = dominance " +
                                  frac(laws, vectors));
  return rep.finish();
}

PrimeDescriptor random_prime(Rng& rng, int n) {
  std::vector<int> N;
  for (int i = 1; i <= n; ++i) {
    if (rng.coin()) N.push_back(i);
  }
  std::vector<int> cn = complement(n, N);
  if (cn.empty()) return make_prime(n, N, QZero{});
  long kind = rng.range(0, 3);
  if (kind == 0) return make_prime(n, N, QZero{});
  if (kind == 1) {
    Point pt;
    for (int c : cn) {
      if (rng.coin() || pt.empty()) pt[c] = rng.nonzero_rational(30);
    }
    return make_prime(n, N, QPoint{pt});
  }
  if (kind == 3 && cn.size() >= 2) {
    std::size_t ia = static_cast<std::size_t>(rng.range(0, static_cast<long>(cn.size()) - 1));
    std::size_t ib = (ia + static_cast<std::size_t>(rng.range(1, static_cast<long>(cn.size()) - 1))) % cn.size();
    int a = cn[ia], b = cn[ib];
    std::vector<int> vars = {std::min(a, b), std::max(a, b)};
    LaurentElem xa = LaurentElem::variable(vars, a), xb = LaurentElem::variable(vars, b);
    Rational c = rng.nonzero_rational(4);
    LaurentElem g = rng.coin() ? xa - LaurentElem::variable(vars, b, rng.range(1, 2)).scaled(c)
                               : xa * xb - LaurentElem::constant(vars, c);
    return make_prime(n, N, QPrincipal{g});
  }
  int c = cn[static_cast<std::size_t>(rng.range(0, static_cast<long>(cn.size()) - 1))];
  // x^2 + k, x^2 - k and x^3 - k with k not a square (cube) are irreducible.
  long k = rng.range(1, 60);
  long root = 0;
  while ((root + 1) * (root + 1) <= k) ++root;
  UniPoly p;
  switch (rng.range(0, 3)) {
    case 0:
      p = UniPoly(std::vector<Rational>{k, 0, 1});
      break;
    case 1:
      p = root * root == k ? UniPoly::linear_root(k) : UniPoly(std::vector<Rational>{-k, 0, 1});
      break;
    case 2: {
      long cube = 0;
      while ((cube + 1) * (cube + 1) * (cube + 1) <= k) ++cube;
      p = cube * cube * cube == k ? UniPoly::linear_root(-k) : UniPoly(std::vector<Rational>{-k, 0, 0, 1});
      break;
    }
    default:
      p = UniPoly::linear_root(rng.nonzero_rational(30));
  }
  return make_prime(n, N, QPrincipal{LaurentElem::from_unipoly(p, c)});
}

// Heights read straight off the descriptor shape.
HeightReport expected_height(const PrimeDescriptor& p) {
  unsigned cn = static_cast<unsigned>(p.CN().size());
  unsigned hl = 0;
  if (std::holds_alternative<QPrincipal>(p.q)) hl = 1;
  if (const auto* pt = std::get_if<QPoint>(&p.q)) hl = static_cast<unsigned>(pt->coords.size());
  return {cn + hl, 2 * static_cast<unsigned>(p.N.size()) + cn - hl};
}

CheckResult spectrum_geometry(std::uint64_t seed, bool quick) {
  Report rep("spectrum-geometry");
  Rng rng(seed);
  std::size_t want = quick ? 40 : 200;
  for (int n = 1; n <= 3; ++n) {
    std::vector<PrimeDescriptor> family;
    std::set<std::string> seen;
    auto add = [&](const PrimeDescriptor& p) {
      if (seen.insert(to_string(p)).second) family.push_back(p);
    };
    add(make_prime(n, full(n), QZero{}));
    for (const auto& p : height_one_primes(n)) add(p);
    for (int attempt = 0; attempt < 20000 && family.size() < want; ++attempt) add(random_prime(rng, n));
    std::size_t ok = 0;
    for (const auto& p : family) {
      HeightReport h = prime_height(p), e = expected_height(p);
      if (h.ht == e.ht && h.cht == e.cht && h.ht + h.cht == 2U * static_cast<unsigned>(n)) ++ok;
    }
    rep.expect(ok == family.size() && family.size() >= want,
               "n=" + std::to_string(n) + ": ht + cht = 2n on " + frac(ok, family.size()) + " descriptors");

    std::vector<std::vector<std::size_t>> succ(family.size()), pred(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        if (i != j && prime_contains(family[i], family[j])) {
          succ[i].push_back(j);
          pred[j].push_back(i);
        }
      }
    }
    // Middle elements of strict 3-chains.
    std::vector<std::size_t> middles;
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (!succ[j].empty() && !pred[j].empty()) middles.push_back(j);
    }
    auto pick = [&rng](const std::vector<std::size_t>& v) {
      return v[static_cast<std::size_t>(rng.range(0, static_cast<long>(v.size()) - 1))];
    };
    std::size_t chains = 0, additive = 0, refined = 0, target = quick ? 40 : 200;
    while (!middles.empty() && chains < target) {
      std::size_t j = pick(middles), i = pick(pred[j]), k = pick(succ[j]);
      ++chains;
      const auto &p1 = family[i], &p2 = family[j], &p3 = family[k];
      unsigned r13 = relative_height(p1, p3);
      if (r13 == relative_height(p1, p2) + relative_height(p2, p3) && r13 == expected_height(p3).ht - expected_height(p1).ht) {
        ++additive;
      }
      auto chain = catenary_refine({p1, p2, p3});
      bool sat = chain.size() == r13 + 1 && chain.front() == p1 && chain.back() == p3 &&
                 std::find(chain.begin(), chain.end(), p2) != chain.end();
      for (std::size_t s = 1; sat && s < chain.size(); ++s) {
        sat = prime_contains(chain[s - 1], chain[s]) && !(chain[s - 1] == chain[s]) &&
              relative_height(chain[s - 1], chain[s]) == 1;
      }
      if (sat) ++refined;
    }
    rep.expect(chains == target && additive == chains,
               "n=" + std::to_string(n) + ": relative height additive on 3-chains " + frac(additive, chains));
    rep.expect(refined == chains, "n=" + std::to_string(n) + ": refinements saturated with length = relative height " +
                                      frac(refined, chains));
  }
  return rep.finish();
}

CheckResult min_primes(std::uint64_t, bool quick) {
  Report rep("min-primes");
  auto ideals = enumerate_idempotent_ideals(3);
  std::size_t ok = 0, total = 0;
  for (const auto& I : ideals) {
    if (std::holds_alternative<IdealWhole>(I.v)) continue;
    ++total;
    auto mp = min_primes_idempotent(I);
    IdealForm prod = whole_ideal(3), cap = whole_ideal(3);
    bool contained = true;
    for (const auto& p : mp) {
      IdealForm P = prime_ideal(p);
      prod = ideal_product(prod, P);
      cap = ideal_intersection(cap, P);
      if (!ideal_contains(I, P)) contained = false;
    }
    bool minimal = true;
    for (std::size_t a = 0; a < mp.size(); ++a) {
      for (std::size_t b = 0; b < mp.size(); ++b) {
        if (a != b && prime_contains(mp[a], mp[b])) minimal = false;
      }
    }
    if (!mp.empty() && prod == I && cap == I && contained && minimal) ++ok;
  }
  rep.expect(ok == total, "n=3 proper idempotent ideals: product = intersection = I over minimal primes " + frac(ok, total));

  std::size_t limit = quick ? 8 : ideals.size();
  std::size_t dist = 0, triples = 0;
  for (std::size_t a = 0; a < limit; ++a) {
    for (std::size_t b = 0; b < limit; ++b) {
      for (std::size_t c = 0; c < limit; ++c) {
        const auto &I = ideals[a], &J = ideals[b], &K = ideals[c];
        ++triples;
        bool d1 = ideal_intersection(I, ideal_sum(J, K)) == ideal_sum(ideal_intersection(I, J), ideal_intersection(I, K));
        bool d2 = ideal_sum(I, ideal_intersection(J, K)) == ideal_intersection(ideal_sum(I, J), ideal_sum(I, K));
        bool d3 = ideal_product(I, ideal_sum(J, K)) == ideal_sum(ideal_product(I, J), ideal_product(I, K));
        if (d1 && d2 && d3) ++dist;
      }
    }
  }
  rep.expect(dist == triples, "distributive laws over triples of idempotent ideals " + frac(dist, triples));
  return rep.finish();
}

CheckResult anres_exactness(std::uint64_t, bool quick) {
  Report rep("anres-exactness");
  for (int n = 2; n <= 3; ++n) {
    unsigned dmax = quick ? (n == 2 ? 4U : 3U) : 8U;
    std::size_t ok = 0;
    for (unsigned d = 0; d <= dmax; ++d) {
      TruncatedComplex c = build_anres(n, d);
      bool zero = check_d_squared(c);
      for (const auto& r : check_tag_diagonal_exactness(c)) zero = zero && r.homology_dim == 0;
      // dim a_n in degree <= d: all monomials minus sector vectors with no matrix unit.
      std::vector<Integer> plain(d + 1, 0);
      plain[0] = 1;
      for (int f = 0; f < n; ++f) {
        std::vector<Integer> next(d + 1, 0);
        for (unsigned s = 0; s <= d; ++s) {
          for (unsigned k = 0; s + k <= d; ++k) next[s + k] += plain[s] * (k == 0 ? 1 : 2);
        }
        plain = next;
      }
      Integer non_mat = 0;
      for (const auto& v : plain) non_mat += v;
      Integer want = choose(d + 2U * static_cast<unsigned>(n), 2U * static_cast<unsigned>(n)) - non_mat;
      if (zero && Integer(static_cast<unsigned long>(c.spaces.back().size())) == want) ++ok;
    }
    rep.expect(ok == dmax + 1, "n=" + std::to_string(n) + " d=0.." + std::to_string(dmax) +
                                   ": d^2 = 0, zero homology at every position, dim a_n matches " + frac(ok, dmax + 1));
  }
  return rep.finish();
}

CheckResult koszul_package(std::uint64_t seed, bool quick) {
  Report rep("koszul-package");
  Rng rng(seed);
  for (int n = 1; n <= 3; ++n) {
    unsigned d = quick ? 3 : (n == 3 ? 5U : 6U);
    std::vector<Rational> lambda;
    for (int i = 0; i < n; ++i) lambda.push_back(rng.nonzero_rational(4));
    TruncatedComplex c = build_koszul_Mlambda(n, lambda, d);
    auto reports = check_windowed_exactness(c);
    bool interior = true;
    for (std::size_t k = 0; k + 1 < reports.size(); ++k) interior = interior && reports[k].homology_dim == 0;
    bool h0 = reports.back().homology_dim == static_cast<long>(choose(d + static_cast<unsigned>(n), static_cast<unsigned>(n)).get_ui());
    rep.expect(check_d_squared(c) && interior && h0,
               "n=" + std::to_string(n) + " d=" + std::to_string(d) +
                   ": d^2 = 0, exact above K_0, H_0 = polynomials of degree <= d");
  }

  std::size_t trials = quick ? 50 : 500, ok = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rational lambda = rng.nonzero_rational(5);
    Element g = random_f_element(rng, 4, 3);
    Element f = f_block_inverse(lambda, g);
    bool in_f = f_block_part(f, {1}) == to_decomposed(f);
    if (in_f && (Element::y(1, 1) - Element::constant(1, lambda)) * f == g) ++ok;
  }
  rep.expect(ok == trials, "f_block_inverse: (y - lambda) f = g with f in F " + frac(ok, trials));
  bool rejects_zero = false;
  try {
    f_block_inverse(0, matrix_unit(1, 1, 0, 0));
  } catch (const DomainError& e) {
    rejects_zero = e.code() == "not-bijective";
  }
  rep.expect(rejects_zero, "lambda = 0 rejected as not bijective");

  ok = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rational lambda = rng.nonzero_rational(5);
    Element a = rng.element(1, 4, 4) + random_f_element(rng, 3, 2);
    CokerResult r = coker_principal_left(lambda, a);
    // phi(x^i y^j) = lambda^(j-i) vanishes on (y - lambda) S_1.
    Rational phi = 0;
    for (const auto& [m, c] : a.terms()) phi += c * sn::pow(lambda, static_cast<long>(m.beta(0)) - static_cast<long>(m.alpha(0)));
    Element s = Element::y(1, 1) - Element::constant(1, lambda);
    if (a - Element::constant(1, r.scalar) == s * r.certificate && r.scalar == phi) ++ok;
  }
  rep.expect(ok == trials, "coker_principal_left: a - c = (y - lambda) q and c = phi(a) " + frac(ok, trials));

  Rational lambda = 3;
  bool acts = true;
  for (unsigned i = 0; i <= 5; ++i) {
    // In S_1 / S_1 (y - lambda): x^a y^b -> lambda^b x^a.
    std::map<unsigned, Rational> image;
    Element e = matrix_unit(1, 1, i, 0);
    for (const auto& [m, c] : e.terms()) image[m.alpha(0)] += c * sn::pow(lambda, m.beta(0));
    std::erase_if(image, [](const auto& kv) { return sn::is_zero(kv.second); });
    acts = acts && image.size() == 2 && image[i] == 1 && image[i + 1] == -lambda;
  }
  rep.expect(acts, "E_i0 acts on M_lambda as x^i - lambda x^(i+1), so F M_lambda != 0");

  for (int n = 1; n <= 3; ++n) {
    unsigned d = n == 3 ? 2 : (quick ? 2U : 4U);
    rep.expect(check_projective_split(SplitKind::PnSummand, n, d) && check_projective_split(SplitKind::FnColumn, n, d),
               "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": P_n summand and F_n column splittings hold");
  }
  for (int n = 1; n <= 2; ++n) {
    unsigned d = quick ? 2 : (n == 1 ? 5U : 3U);
    rep.expect(nonsplit_witness_F(n, d), "n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                             ": no f in F_(<=d) with E f = E for all listed E");
  }
  return rep.finish();
}

std::vector<SimpleModuleSpec> module_family(int n) {
  std::vector<SimpleModuleSpec> out;
  static const std::vector<std::vector<Rational>> gs = {{-2, 0, 1}, {1, 0, 1}, {-2, 0, 0, 1}};
  for (const auto& N : all_subsets(n)) {
    std::vector<int> cn = complement(n, N);
    if (cn.empty()) {
      out.push_back(make_module_spec(n, N, std::nullopt, {}));
      continue;
    }
    Point ones, mixed;
    const Rational vals[] = {2, -1, 3};
    for (std::size_t k = 0; k < cn.size(); ++k) {
      ones[cn[k]] = 1;
      mixed[cn[k]] = vals[k];
    }
    out.push_back(make_module_spec(n, N, std::nullopt, ones));
    out.push_back(make_module_spec(n, N, std::nullopt, mixed));
    if (cn.size() == 1) {
      for (const auto& g : gs) out.push_back(make_module_spec(n, N, UniPoly(g), {}));
    }
  }
  return out;
}

CheckResult simple_modules(std::uint64_t seed, bool quick) {
  Report rep("simple-modules");
  Rng rng(seed);
  std::size_t per = quick ? 10 : 100;
  for (int n = 1; n <= 3; ++n) {
    std::size_t ok = 0;
    for (std::size_t t = 0; t < per; ++t) {
      PolyVector p(n);
      while (p.is_zero()) {
        long terms = rng.range(1, 3);
        for (long k = 0; k < terms; ++k) {
          std::vector<unsigned> e(static_cast<std::size_t>(n));
          for (auto& v : e) v = static_cast<unsigned>(rng.range(0, 3));
          p.add_term(e, rng.nonzero_rational(3));
        }
      }
      Element w = simplicity_witness(p);
      if (act_on_poly(w, p) == PolyVector::monomial(std::vector<unsigned>(static_cast<std::size_t>(n), 0))) ++ok;
    }
    rep.expect(ok == per, "P_" + std::to_string(n) + ": witness w with w p = 1 for random p " + frac(ok, per));

    auto specs = module_family(n);
    std::size_t inv_ok = 0, wit_ok = 0, wit_total = 0;
    std::vector<IdealForm> anns;
    std::size_t zero_anns = 0;
    bool pn_zero = false;
    for (const auto& s : specs) {
      ModuleInvariants mi = module_invariants(s);
      unsigned nN = static_cast<unsigned>(s.N.size()), nC = static_cast<unsigned>(s.CN().size());
      unsigned ext = s.g ? static_cast<unsigned>(*s.g->degree()) : 1;
      if (mi.gk == nN && mi.pd == nC && mi.gk + mi.pd == static_cast<unsigned>(n) && mi.mult == mi.end_dim &&
          mi.end_dim == ext) {
        ++inv_ok;
      }
      std::size_t dim = ResidueField(s).dim();
      for (std::size_t t = 0; t < per; ++t) {
        ModVector v(s);
        while (v.is_zero()) {
          long terms = rng.range(1, 3);
          for (long k = 0; k < terms; ++k) {
            std::vector<unsigned> e(s.N.size());
            for (auto& x : e) x = static_cast<unsigned>(rng.range(0, 3));
            v.add_term(e, static_cast<std::size_t>(rng.range(0, static_cast<long>(dim) - 1)), rng.nonzero_rational(3));
          }
        }
        ++wit_total;
        if (act_on_module(module_witness(v), v) == ModVector::generator(s)) ++wit_ok;
      }
      IdealForm ann = annihilator_of_simple(s);
      if (ann == zero_ideal(n)) {
        ++zero_anns;
        pn_zero = s.N.size() == static_cast<std::size_t>(n);
      }
      anns.push_back(ann);
    }
    std::set<std::string> names;
    for (const auto& a : anns) names.insert(to_string(a));
    std::size_t distinct = names.size();
    std::string tag = "n=" + std::to_string(n) + " (" + std::to_string(specs.size()) + " modules): ";
    rep.expect(inv_ok == specs.size(), tag + "gk = |N|, pd = |CN|, gk + pd = n, mult = end_dim " + frac(inv_ok, specs.size()));
    rep.expect(wit_ok == wit_total, tag + "witnesses return random vectors to the generator " + frac(wit_ok, wit_total));
    rep.expect(distinct == specs.size(), tag + "annihilators pairwise distinct " + frac(distinct, specs.size()));
    rep.expect(zero_anns == 1 && pn_zero, tag + "P_n is the only faithful module");
  }
  return rep.finish();
}

CheckResult kernel_closed_forms(std::uint64_t, bool quick) {
  Report rep("kernel-closed-forms");
  unsigned dmax = quick ? 5 : 10;
  std::size_t ann = 0, cen = 0, yann = 0, ycen = 0;
  Element x = Element::x(1, 1), y = Element::y(1, 1);
  for (unsigned d = 0; d <= dmax; ++d) {
    std::vector<Element> units, xs, ys;
    for (unsigned i = 0; i + 2 <= d; ++i) units.push_back(matrix_unit(1, 1, i, 0));
    for (unsigned k = 0; k <= d; ++k) {
      xs.push_back(Element::x(1, 1, k));
      ys.push_back(Element::y(1, 1, k));
    }
    if (same_span(left_annihilator_slice(x, d), units)) ++ann;
    if (same_span(centralizer_slice(x, d), xs)) ++cen;
    if (left_annihilator_slice(y, d).empty()) ++yann;
    if (same_span(centralizer_slice(y, d), ys)) ++ycen;
  }
  std::size_t t = dmax + 1;
  std::string range = "d=0.." + std::to_string(dmax) + ": ";
  rep.expect(ann == t, range + "left annihilator of x = span{E_i0 : i + 2 <= d} " + frac(ann, t));
  rep.expect(cen == t, range + "centralizer of x = span{1, x, ..., x^d} " + frac(cen, t));
  rep.expect(yann == t, range + "left annihilator of y = 0 " + frac(yann, t));
  rep.expect(ycen == t, range + "centralizer of y = span{1, y, ..., y^d} " + frac(ycen, t));
  return rep.finish();
}

CheckResult noetherian_factors(std::uint64_t seed, bool) {
  Report rep("noetherian-factors");
  Rng rng(seed);
  for (int n = 1; n <= 3; ++n) {
    std::size_t ok = 0, total = 0;
    for (const auto& I : enumerate_idempotent_ideals(n)) {
      Family c = antichain_of(I);
      bool want = true;
      for (int i = 1; i <= n; ++i) {
        std::vector<int> rest = complement(n, {i});
        bool hit = std::any_of(c.begin(), c.end(), [&rest](const std::vector<int>& s) {
          return std::includes(s.begin(), s.end(), rest.begin(), rest.end());
        });
        want = want && hit;
      }
      ++total;
      if (is_noetherian_factor(I) == want) ++ok;
    }
    std::vector<IdealForm> extra;
    for (int t = 0; t < 5; ++t) {
      Point pt;
      for (int i = 1; i <= n; ++i) pt[i] = rng.nonzero_rational(5);
      extra.push_back(prime_ideal(maximal_ideal_from_point(n, pt)));
    }
    if (n == 1) {
      extra.push_back(prime_ideal(s1_maximal(UniPoly(std::vector<Rational>{1, 0, 1}))));
      extra.push_back(s1_ideal(UniPoly(std::vector<Rational>{-2, 0, 1})));
    }
    Family an;
    for (int i = 1; i <= n; ++i) an.push_back(complement(n, {i}));
    extra.push_back(idempotent_ideal(n, an));
    for (const auto& I : extra) {
      ++total;
      if (is_noetherian_factor(I)) ++ok;
    }
    std::size_t negatives = 0;
    for (const auto& p : height_one_primes(n)) {
      if (n == 1) continue;
      ++total;
      ++negatives;
      if (!is_noetherian_factor(prime_ideal(p))) ++ok;
    }
    rep.expect(ok == total, "n=" + std::to_string(n) + ": noetherian exactly when every p_i is contained, " +
                                frac(ok, total) + " forms (idempotents, maximals, a_n, " + std::to_string(negatives) +
                                " height-one primes)");
  }
  return rep.finish();
}

using CheckFn = CheckResult (*)(std::uint64_t, bool);

const std::vector<std::pair<CheckInfo, CheckFn>>& registry() {
  static const std::vector<std::pair<CheckInfo, CheckFn>> r = {
      {{"hilbert-function", "dimension of the degree filtration"}, hilbert_function},
      {{"shift-oracle", "multiplication against the shift representation"}, shift_oracle},
      {{"matrix-units", "matrix-unit calculus and shift relations"}, matrix_units},
      {{"ideal-commutativity", "IJ = JI and membership coherence"}, ideal_commutativity},
      {{"idempotent-lattice", "idempotent ideals versus antichains"}, idempotent_lattice},
      {{"s1-factorization", "unique factorization of rank-one ideals"}, s1_factorization},
      {{"spectrum-geometry", "heights, relative heights, catenarity"}, spectrum_geometry},
      {{"min-primes", "minimal primes of idempotent ideals, distributivity"}, min_primes},
      {{"anres-exactness", "resolution of the augmentation ideal"}, anres_exactness},
      {{"koszul-package", "Koszul complex, F-block inverse, cokernel, splittings"}, koszul_package},
      {{"simple-modules", "simple-module invariants, witnesses, annihilators"}, simple_modules},
      {{"kernel-closed-forms", "annihilator and centralizer slices"}, kernel_closed_forms},
      {{"noetherian-factors", "noetherian factor criterion"}, noetherian_factors},
  };
  return r;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> c = [] {
    std::vector<CheckInfo> out;
    for (const auto& [info, fn] : registry()) out.push_back(info);
    return out;
  }();
  return c;
}

CheckResult run_check(const std::string& tag, std::uint64_t seed, bool quick) {
  for (const auto& [info, fn] : registry()) {
    if (info.tag != tag) continue;
    try {
      return fn(seed, quick);
    } catch (const DomainError& e) {
      return {tag, false, {"FAIL error[" + e.code() + "]: " + e.what(), "result: FAIL"}};
    } catch (const std::logic_error& e) {
      return {tag, false, {std::string("FAIL internal: ") + e.what(), "result: FAIL"}};
    }
  }
  throw DomainError("unknown-tag", "unknown verify tag '" + tag + "'");
}

}  // namespace sn::cli
