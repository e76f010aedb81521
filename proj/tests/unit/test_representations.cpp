#include <random>

#include "../oracles/oracles.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "sn/decomposition.hpp"
#include "sn/ideals.hpp"
#include "sn/representations.hpp"

using namespace sn;
using testing::E;
using testing::U;

namespace {

PolyVector poly(std::vector<unsigned> e, const Rational& c = 1) { return PolyVector::monomial(std::move(e), c); }

PolyVector sum(PolyVector a, const PolyVector& b) {
  for (const auto& [e, c] : b.terms) a.add_term(e, c);
  return a;
}

Element random_element(std::mt19937_64& rng, int n, unsigned max_exp, int terms) {
  Element a(n);
  for (int t = 0; t < terms; ++t) {
    Monomial m(n);
    for (auto& e : m.exps) e = static_cast<unsigned>(rng() % (max_exp + 1));
    a.add_term(m, Rational(static_cast<long>(rng() % 5) - 2));
  }
  return a;
}

}  // namespace

TEST_CASE("action on the polynomial module") {
  CHECK(act_on_poly(E("y1"), poly({3})) == poly({2}));
  CHECK(act_on_poly(E("y1^2"), poly({1})).is_zero());
  CHECK(act_on_poly(matrix_unit(1, 1, 0, 0), sum(poly({0}), poly({1}))) == poly({0}));
}

TEST_CASE("polynomial action agrees with the shift oracle") {
  std::mt19937_64 rng(29);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      Element a = random_element(rng, n, 3, 3);
      std::vector<unsigned> k(static_cast<std::size_t>(n));
      for (auto& e : k) e = static_cast<unsigned>(rng() % 4);
      PolyVector got = act_on_poly(a, poly(k));
      oracle::Vec want = oracle::act(a, oracle::basis_vector(k));
      oracle::Vec have(got.terms.begin(), got.terms.end());
      CHECK(have == want);
    }
  }
}

TEST_CASE("simplicity witnesses") {
  Element w = simplicity_witness(poly({2}, 3));
  CHECK(w == E("1/3*y1^2"));
  CHECK(act_on_poly(w, poly({2}, 3)) == poly({0}));
  CHECK(simplicity_witness(poly({0})) == Element::one(1));
  PolyVector p = sum(poly({1, 0}), poly({0, 1}));
  Element w2 = simplicity_witness(p);
  CHECK((w2 == E("y1", 2) || w2 == E("y2", 2)));
  CHECK(act_on_poly(w2, p) == poly({0, 0}));
}

TEST_CASE("simple module actions") {
  SimpleModuleSpec pt = make_module_spec(1, {}, std::nullopt, {{1, 2}});
  ModVector one = ModVector::generator(pt);
  ModVector half(pt);
  half.add_term({}, 0, Rational(1, 2));
  CHECK(act_on_module(E("y1"), one) == half);

  SimpleModuleSpec sq = make_module_spec(1, {}, U("x^2 - 2"), {});
  ModVector t(sq);
  t.add_term({}, 1, 1);
  CHECK(act_on_module(E("x1"), ModVector::generator(sq)) == t);
  ModVector two(sq);
  two.add_term({}, 0, 2);
  CHECK(act_on_module(E("x1"), t) == two);

  SimpleModuleSpec lin = make_module_spec(1, {}, U("x - 5"), {});
  CHECK(lin.point == Point{{1, Rational(5)}});
}

TEST_CASE("point modules evaluate the Laurent image") {
  std::mt19937_64 rng(31);
  SimpleModuleSpec spec = make_module_spec(2, {}, std::nullopt, {{1, Rational(2)}, {2, Rational(-1, 3)}});
  for (int trial = 0; trial < 30; ++trial) {
    Element a = random_element(rng, 2, 3, 4);
    Rational want = 0;
    for (const auto& [m, c] : a.terms()) {
      want += c * pow(Rational(2), static_cast<long>(m.alpha(0)) - m.beta(0)) *
              pow(Rational(-1, 3), static_cast<long>(m.alpha(1)) - m.beta(1));
    }
    ModVector got = act_on_module(a, ModVector::generator(spec));
    ModVector expect(spec);
    expect.add_term({}, 0, want);
    CHECK(got == expect);
  }
}

TEST_CASE("module witnesses") {
  SimpleModuleSpec spec = make_module_spec(2, {1}, U("x^2 - 2"), {});
  ModVector v(spec);
  v.add_term({2}, 1, 3);
  v.add_term({0}, 0, 1);
  Element w = module_witness(v);
  CHECK(act_on_module(w, v) == ModVector::generator(spec));
}

TEST_CASE("module Hilbert functions and invariants") {
  CHECK(module_hilbert(polynomial_module(1), 3) == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(module_hilbert(make_module_spec(1, {}, std::nullopt, {{1, 2}}), 3) == std::vector<std::size_t>{1, 1, 1, 1});
  auto h = module_hilbert(make_module_spec(2, {1}, U("x^2 - 2"), {}), 8);
  for (std::size_t i = 4; i + 1 < h.size(); ++i) CHECK(h[i + 1] - h[i] == 2);

  for (int n = 1; n <= 3; ++n) {
    ModuleInvariants p = module_invariants(polynomial_module(n));
    CHECK(p.gk == static_cast<unsigned>(n));
    CHECK(p.mult == 1);
    CHECK(p.end_dim == 1);
    CHECK(p.pd == 0);
  }
  ModuleInvariants q = module_invariants(make_module_spec(1, {}, U("x^2 - 2"), {}));
  CHECK(q.gk == 0);
  CHECK(q.mult == 2);
  CHECK(q.end_dim == 2);
  CHECK(q.pd == 1);
  ModuleInvariants r = module_invariants(make_module_spec(2, {1}, std::nullopt, {{2, 3}}));
  CHECK(r.gk == 1);
  CHECK(r.mult == 1);
  CHECK(r.end_dim == 1);
  CHECK(r.pd == 1);
}

TEST_CASE("shift oracle") {
  TruncatedRep rep{1, 6};
  CHECK(shift_oracle_check(rep, E("y1"), E("x1")));
  CHECK(shift_oracle_check(rep, E("x1"), E("y1")));
  CHECK(shift_oracle_check(rep, E("y1^2"), E("x1^3")));
}

TEST_CASE("annihilators of simple modules") {
  CHECK(canonical(annihilator_of_simple(polynomial_module(2))) == canonical(zero_ideal(2)));
  IdealForm m = annihilator_of_simple(make_module_spec(1, {}, std::nullopt, {{1, 2}}));
  CHECK(canonical(m) == canonical(prime_ideal(s1_maximal(U("x - 2")))));
  IdealForm a = annihilator_of_simple(make_module_spec(2, {1}, std::nullopt, {{2, 3}}));
  IdealForm want = prime_ideal(make_prime(2, {1}, QPoint{{{2, Rational(3)}}}));
  CHECK(canonical(a) == canonical(want));
}
