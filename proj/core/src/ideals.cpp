#include "sn/ideals.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "sn/decomposition.hpp"
#include "sn/errors.hpp"

namespace sn {

namespace {

using Support = std::vector<int>;
using Family = std::vector<Support>;

bool canonical_less(const Support& a, const Support& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_subset(const Support& a, const Support& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::uint32_t to_mask(const Support& s) {
  std::uint32_t m = 0;
  for (int i : s) m |= 1u << (i - 1);
  return m;
}

Support from_mask(std::uint32_t m) {
  Support s;
  for (int i = 0; m >> i; ++i) {
    if (m >> i & 1u) s.push_back(i + 1);
  }
  return s;
}

void check_same_rank(const IdealForm& I, const IdealForm& J) {
  if (I.n != J.n) throw DomainError("rank-mismatch", "ideals of different rank");
}

[[noreturn]] void unsupported(const std::string& what) {
  throw DomainError("unsupported-kinds", what + " is not supported for this pair of ideal classes");
}

// Rank-1 ideals containing F as the generator a of the Laurent ideal (a);
// F itself is a = 0 and the whole algebra is a = 1.
UniPoly as_generator(const IdealForm& I) {
  if (std::holds_alternative<IdealWhole>(I.v)) return UniPoly::constant(1);
  if (std::holds_alternative<Idempotent>(I.v)) return UniPoly();
  return std::get<S1General>(I.v).a;
}

}  // namespace

std::vector<std::vector<int>> maximal_supports(std::vector<std::vector<int>> family) {
  for (auto& s : family) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  Family out;
  for (std::size_t k = 0; k < family.size(); ++k) {
    bool dominated = false;
    for (std::size_t j = k + 1; j < family.size() && !dominated; ++j) {
      dominated = family[j].size() > family[k].size() && is_subset(family[k], family[j]);
    }
    if (!dominated) out.push_back(family[k]);
  }
  return out;
}

IdealForm zero_ideal(int n) { return {n, IdealZero{}}; }
IdealForm whole_ideal(int n) { return {n, IdealWhole{}}; }
IdealForm s1_ideal(const UniPoly& a) { return canonical({1, S1General{a}}); }
IdealForm idempotent_ideal(int n, std::vector<std::vector<int>> antichain) {
  return canonical({n, Idempotent{std::move(antichain)}});
}
IdealForm prime_ideal(const PrimeDescriptor& p) { return canonical({p.n, PrimeForm{p}}); }

IdealForm canonical(IdealForm I) {
  int n = I.n;
  if (n < 1) throw DomainError("bad-rank", "rank must be at least 1");
  if (auto* s = std::get_if<S1General>(&I.v)) {
    if (n != 1) throw DomainError("rank-mismatch", "the F + a(K[x]+K[y]) form exists only for n = 1");
    if (s->a.is_zero()) return {1, Idempotent{{{}}}};
    UniPoly a = uni_normalize_monic(s->a).first;
    if (a.is_constant()) return whole_ideal(1);
    if (sn::is_zero(a.coeff(0))) throw DomainError("bad-ideal", "the generator a must satisfy a(0) != 0");
    return {1, S1General{a}};
  }
  if (auto* id = std::get_if<Idempotent>(&I.v)) {
    for (const auto& s : id->antichain) {
      for (int i : s) {
        if (i < 1 || i > n) throw DomainError("index-out-of-range", "support index " + std::to_string(i) + " out of range");
      }
    }
    Family c = maximal_supports(id->antichain);
    if (c.empty()) return zero_ideal(n);
    if (c.size() == 1 && static_cast<int>(c[0].size()) == n) return whole_ideal(n);
    return {n, Idempotent{c}};
  }
  if (auto* pf = std::get_if<PrimeForm>(&I.v)) {
    PrimeDescriptor p = make_prime(pf->p.n, pf->p.N, pf->p.q);
    if (p.n != n) throw DomainError("rank-mismatch", "descriptor rank differs from ideal rank");
    if (std::holds_alternative<QZero>(p.q)) {
      Family c;
      for (int i : p.CN()) c.push_back(complement(n, {i}));
      return canonical({n, Idempotent{c}});
    }
    if (n == 1) {
      if (const auto* pt = std::get_if<QPoint>(&p.q)) return {1, S1General{UniPoly::linear_root(pt->coords.at(1))}};
      return {1, S1General{*std::get<QPrincipal>(p.q).g.as_unipoly(1)}};
    }
    return {n, PrimeForm{p}};
  }
  return I;
}

bool ideal_membership(const IdealForm& I0, const Element& a) {
  IdealForm I = canonical(I0);
  if (a.rank() != I.n) throw DomainError("rank-mismatch", "element rank differs from ideal rank");
  if (std::holds_alternative<IdealZero>(I.v)) return a.is_zero();
  if (std::holds_alternative<IdealWhole>(I.v)) return true;
  if (const auto* s = std::get_if<S1General>(&I.v)) {
    return laurent_divides(LaurentElem::from_unipoly(s->a, 1), laurent_projection(a));
  }
  if (const auto* id = std::get_if<Idempotent>(&I.v)) {
    Family csupps;
    for (const auto& s : id->antichain) csupps.push_back(complement(I.n, s));
    DecomposedElement d = to_decomposed(a);
    for (const auto& [sv, c] : d.terms()) {
      bool covered = std::any_of(csupps.begin(), csupps.end(), [&sv](const Support& cs) {
        return std::all_of(cs.begin(), cs.end(), [&sv](int i) { return sv[static_cast<std::size_t>(i - 1)].is_mat(); });
      });
      if (!covered) return false;
    }
    return true;
  }
  return prime_membership(std::get<PrimeForm>(I.v).p, a);
}

bool ideal_contains(const IdealForm& I0, const IdealForm& J0) {
  check_same_rank(I0, J0);
  IdealForm I = canonical(I0), J = canonical(J0);
  if (std::holds_alternative<IdealZero>(I.v) || std::holds_alternative<IdealWhole>(J.v)) return true;
  if (std::holds_alternative<IdealWhole>(I.v) || std::holds_alternative<IdealZero>(J.v)) return false;
  if (I.n == 1) {
    UniPoly a = as_generator(I), b = as_generator(J);
    if (b.is_zero()) return a.is_zero();
    return divmod(a, b).remainder.is_zero();
  }
  const auto* ip = std::get_if<PrimeForm>(&I.v);
  const auto* jp = std::get_if<PrimeForm>(&J.v);
  if (ip && jp) return prime_contains(ip->p, jp->p);
  if (ip) return false;
  const auto& c1 = std::get<Idempotent>(I.v).antichain;
  if (jp) {
    Support cn = jp->p.CN();
    return std::none_of(c1.begin(), c1.end(), [&cn](const Support& s) { return is_subset(cn, s); });
  }
  const auto& c2 = std::get<Idempotent>(J.v).antichain;
  return std::all_of(c1.begin(), c1.end(), [&c2](const Support& s) {
    return std::any_of(c2.begin(), c2.end(), [&s](const Support& t) { return is_subset(s, t); });
  });
}

IdealForm ideal_product(const IdealForm& I0, const IdealForm& J0) {
  check_same_rank(I0, J0);
  IdealForm I = canonical(I0), J = canonical(J0);
  int n = I.n;
  if (std::holds_alternative<IdealZero>(I.v) || std::holds_alternative<IdealZero>(J.v)) return zero_ideal(n);
  if (std::holds_alternative<IdealWhole>(I.v)) return J;
  if (std::holds_alternative<IdealWhole>(J.v)) return I;
  if (n == 1) return canonical({1, S1General{as_generator(I) * as_generator(J)}});
  const auto* a = std::get_if<Idempotent>(&I.v);
  const auto* b = std::get_if<Idempotent>(&J.v);
  if (!a || !b) unsupported("product");
  Family c;
  for (const auto& s : a->antichain) {
    for (const auto& t : b->antichain) {
      Support u;
      std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
      c.push_back(std::move(u));
    }
  }
  return canonical({n, Idempotent{c}});
}

IdealForm ideal_sum(const IdealForm& I0, const IdealForm& J0) {
  check_same_rank(I0, J0);
  IdealForm I = canonical(I0), J = canonical(J0);
  int n = I.n;
  if (std::holds_alternative<IdealWhole>(I.v) || std::holds_alternative<IdealWhole>(J.v)) return whole_ideal(n);
  if (std::holds_alternative<IdealZero>(I.v)) return J;
  if (std::holds_alternative<IdealZero>(J.v)) return I;
  if (n == 1) return canonical({1, S1General{gcd(as_generator(I), as_generator(J))}});
  const auto* a = std::get_if<Idempotent>(&I.v);
  const auto* b = std::get_if<Idempotent>(&J.v);
  if (!a || !b) {
    if (ideal_contains(I, J)) return J;
    if (ideal_contains(J, I)) return I;
    unsupported("sum");
  }
  Family c = a->antichain;
  c.insert(c.end(), b->antichain.begin(), b->antichain.end());
  return canonical({n, Idempotent{c}});
}

IdealForm ideal_intersection(const IdealForm& I0, const IdealForm& J0) {
  check_same_rank(I0, J0);
  IdealForm I = canonical(I0), J = canonical(J0);
  int n = I.n;
  if (std::holds_alternative<IdealZero>(I.v) || std::holds_alternative<IdealZero>(J.v)) return zero_ideal(n);
  if (std::holds_alternative<IdealWhole>(I.v)) return J;
  if (std::holds_alternative<IdealWhole>(J.v)) return I;
  if (n == 1) return canonical({1, S1General{lcm(as_generator(I), as_generator(J))}});
  const auto* a = std::get_if<Idempotent>(&I.v);
  const auto* b = std::get_if<Idempotent>(&J.v);
  if (!a || !b) {
    if (ideal_contains(I, J)) return I;
    if (ideal_contains(J, I)) return J;
    unsupported("intersection");
  }
  if (n > 20) throw DomainError("rank-too-large", "idempotent intersection supports n <= 20");
  // Down-sets of both antichains, intersected.
  auto down = [n](const Family& c) {
    std::vector<bool> in(std::size_t{1} << n, false);
    for (const auto& s : c) {
      std::uint32_t m = to_mask(s);
      for (std::uint32_t u = m;; u = (u - 1) & m) {
        in[u] = true;
        if (u == 0) break;
      }
    }
    return in;
  };
  std::vector<bool> da = down(a->antichain), db = down(b->antichain);
  Family c;
  for (std::uint32_t u = 0; u < da.size(); ++u) {
    if (da[u] && db[u]) c.push_back(from_mask(u));
  }
  return canonical({n, Idempotent{c}});
}

PrimeDescriptor s1_maximal(const UniPoly& g) {
  return make_prime(1, {}, QPrincipal{LaurentElem::from_unipoly(g, 1)});
}

std::vector<std::pair<PrimeDescriptor, unsigned>> s1_factor_into_maximals(const IdealForm& I0) {
  IdealForm I = canonical(I0);
  const auto* s = std::get_if<S1General>(&I.v);
  if (I.n != 1 || !s) {
    throw DomainError("not-factorable",
                      "not factorable into maximal ideals: need a proper rank-1 ideal other than 0 and F");
  }
  std::vector<std::pair<PrimeDescriptor, unsigned>> out;
  for (const auto& [g, m] : uni_factor(s->a)) out.emplace_back(s1_maximal(g), m);
  return out;
}

namespace {

// All antichains of subsets of [n] as bitmask families, in search order.
void enumerate_antichains(int n, std::vector<std::vector<std::uint32_t>>& out) {
  std::vector<std::uint32_t> sets;
  for (std::uint32_t m = 0; m < (1u << n); ++m) sets.push_back(m);
  std::stable_sort(sets.begin(), sets.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint32_t> cur;
  auto comparable = [](std::uint32_t a, std::uint32_t b) { return (a & b) == a || (a & b) == b; };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    out.push_back(cur);
    for (std::size_t k = from; k < sets.size(); ++k) {
      bool ok = std::none_of(cur.begin(), cur.end(), [&](std::uint32_t c) { return comparable(c, sets[k]); });
      if (!ok) continue;
      cur.push_back(sets[k]);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<IdealForm> enumerate_idempotent_ideals(int n) {
  if (n < 1 || n > kMaxEnumerateRank) {
    throw DomainError("rank-too-large", "enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerateRank) +
                                            "; use 'lattice count' for n = 6");
  }
  std::vector<std::vector<std::uint32_t>> raw;
  enumerate_antichains(n, raw);
  std::vector<Family> fams;
  for (const auto& r : raw) {
    Family c;
    for (auto m : r) c.push_back(from_mask(m));
    fams.push_back(maximal_supports(c));
  }
  std::sort(fams.begin(), fams.end(), [](const Family& a, const Family& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
  });
  std::vector<IdealForm> out;
  for (auto& c : fams) out.push_back(canonical({n, Idempotent{std::move(c)}}));
  return out;
}

Integer count_idempotent_ideals(int n) {
  if (n < 1 || n > kMaxCountRank) {
    throw DomainError("rank-too-large", "counting supports 1 <= n <= " + std::to_string(kMaxCountRank));
  }
  if (n <= kMaxEnumerateRank) {
    std::vector<std::vector<std::uint32_t>> raw;
    enumerate_antichains(n, raw);
    return Integer(static_cast<unsigned long>(raw.size()));
  }
  // Down-sets on [n] are pairs D1 subset D0 of down-sets on [n-1].
  std::vector<std::vector<std::uint32_t>> raw;
  enumerate_antichains(n - 1, raw);
  std::vector<std::uint64_t> downs;
  for (const auto& r : raw) {
    std::uint64_t d = 0;
    for (auto m : r) {
      for (std::uint32_t u = m;; u = (u - 1) & m) {
        d |= std::uint64_t{1} << u;
        if (u == 0) break;
      }
    }
    downs.push_back(d);
  }
  unsigned long long count = 0;
  for (auto a : downs) {
    for (auto b : downs) count += (a & b) == a;
  }
  return Integer(std::to_string(count));
}

std::vector<PrimeDescriptor> min_primes_idempotent(const IdealForm& I0) {
  IdealForm I = canonical(I0);
  int n = I.n;
  if (std::holds_alternative<IdealWhole>(I.v)) throw DomainError("whole-ideal", "the whole algebra has no minimal primes");
  Family c;
  if (const auto* id = std::get_if<Idempotent>(&I.v)) {
    c = id->antichain;
  } else if (!std::holds_alternative<IdealZero>(I.v)) {
    throw DomainError("not-idempotent", "minimal primes are computed for idempotent ideals only");
  }
  if (n > 20) throw DomainError("rank-too-large", "minimal primes support n <= 20");
  std::vector<std::uint32_t> cs;
  for (const auto& s : c) cs.push_back(to_mask(complement(n, s)));
  std::vector<std::uint32_t> hitting;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::all_of(cs.begin(), cs.end(), [m](std::uint32_t x) { return (x & m) != 0; })) hitting.push_back(m);
  }
  Family minimal;
  for (auto m : hitting) {
    bool is_min = std::none_of(hitting.begin(), hitting.end(), [m](std::uint32_t h) { return h != m && (h & m) == h; });
    if (is_min) minimal.push_back(from_mask(m));
  }
  std::sort(minimal.begin(), minimal.end(), canonical_less);
  std::vector<PrimeDescriptor> out;
  for (const auto& M : minimal) out.push_back(make_prime(n, complement(n, M), QZero{}));

  IdealForm prod = whole_ideal(n), cap = whole_ideal(n);
  for (const auto& p : out) {
    prod = ideal_product(prod, prime_ideal(p));
    cap = ideal_intersection(cap, prime_ideal(p));
  }
  if (!(prod == I) || !(cap == I)) throw std::logic_error("minimal primes do not reproduce the ideal");
  return out;
}

bool is_noetherian_factor(const IdealForm& I) {
  for (const auto& p : height_one_primes(I.n)) {
    if (!ideal_contains(prime_ideal(p), I)) return false;
  }
  return true;
}

std::string to_string(const IdealForm& I0) {
  IdealForm I = canonical(I0);
  if (std::holds_alternative<IdealZero>(I.v)) return "0";
  if (std::holds_alternative<IdealWhole>(I.v)) return "S" + std::to_string(I.n);
  if (const auto* s = std::get_if<S1General>(&I.v)) return "F + (" + to_string(s->a) + ")(K[x]+K[y])";
  if (const auto* id = std::get_if<Idempotent>(&I.v)) {
    std::string out = "I{";
    for (std::size_t k = 0; k < id->antichain.size(); ++k) {
      out += k ? ",{" : "{";
      for (std::size_t j = 0; j < id->antichain[k].size(); ++j) out += (j ? "," : "") + std::to_string(id->antichain[k][j]);
      out += "}";
    }
    return out + "}";
  }
  return to_string(std::get<PrimeForm>(I.v).p);
}

}  // namespace sn
