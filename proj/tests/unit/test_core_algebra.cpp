#include <random>

#include "../oracles/oracles.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace sn;
using testing::E;
using testing::error_code;

namespace {

Element random_element(std::mt19937_64& rng, int n, unsigned max_exp, int terms) {
  Element a(n);
  for (int t = 0; t < terms; ++t) {
    Monomial m(n);
    for (auto& e : m.exps) e = static_cast<unsigned>(rng() % (max_exp + 1));
    Rational c(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
    c.canonicalize();
    a.add_term(m, c);
  }
  return a;
}

}  // namespace

TEST_CASE("product rule in both flavors") {
  const AlgebraContext s1{1, Flavor::S};
  const AlgebraContext d1{1, Flavor::D};
  CHECK(multiply(s1, E("y1"), E("x1")) == Element::one(1));
  CHECK(multiply(d1, E("y1"), E("x1")).is_zero());
  CHECK(multiply(s1, E("y1^2"), E("x1^3")) == E("x1"));
  CHECK(multiply(s1, E("x1"), E("y1")) == E("x1*y1"));
  CHECK(multiply(d1, E("x1"), E("y1")) == E("x1*y1"));
}

TEST_CASE("products agree with the shift action") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      Element a = random_element(rng, n, 3, 3);
      Element b = random_element(rng, n, 3, 3);
      CHECK(oracle::product_matches(a * b, a, b));
    }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(5);
  for (Flavor f : {Flavor::S, Flavor::D}) {
    const AlgebraContext ctx{2, f};
    for (int trial = 0; trial < 40; ++trial) {
      Element a = random_element(rng, 2, 2, 3);
      Element b = random_element(rng, 2, 2, 3);
      Element c = random_element(rng, 2, 2, 3);
      CHECK(multiply(ctx, multiply(ctx, a, b), c) == multiply(ctx, a, multiply(ctx, b, c)));
    }
  }
}

TEST_CASE("involution") {
  CHECK(involution(E("x1^2*y1")) == E("x1*y1^2"));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    Element a = random_element(rng, 2, 3, 3);
    Element b = random_element(rng, 2, 3, 3);
    CHECK(involution(involution(a)) == a);
    CHECK(involution(a * b) == involution(b) * involution(a));
  }
}

TEST_CASE("filtration degree and Hilbert function") {
  CHECK(filtration_degree(E("x1^2*y1")) == 3U);
  CHECK_FALSE(filtration_degree(Element(1)).has_value());
  CHECK(hilbert_dim(1, 2).binomial == 6);
  CHECK(hilbert_dim(1, 5).binomial == 21);
  for (int n = 1; n <= 3; ++n) {
    for (unsigned i = 0; i <= 5; ++i) {
      HilbertDim h = hilbert_dim(n, i);
      Integer expect = 1;
      for (unsigned k = 1; k <= 2U * static_cast<unsigned>(n); ++k) expect = expect * (i + k) / k;
      CHECK(h.binomial == expect);
      CHECK(h.binomial == h.enumerated);
      CHECK(monomials_up_to(n, i).size() == h.binomial.get_ui());
    }
  }
}

TEST_CASE("Z^n grading and associated graded symbol") {
  auto parts = zgrade_split(E("x1 + x1*y1"));
  REQUIRE(parts.size() == 2);
  CHECK(parts.at({1}) == E("x1"));
  CHECK(parts.at({0}) == E("x1*y1"));
  CHECK(gr_symbol(E("1 + x1^2*y1")) == E("x1^2*y1"));
  CHECK_FALSE(error_code([] { gr_symbol(Element(1)); }).empty());
}

TEST_CASE("element text") {
  CHECK(to_string(E("1 - x1*y1")) == "1 - 1*x1^1*y1^1");
  CHECK(to_string(Element(2)) == "0");
  CHECK(to_string(E("-x1")) == "-1*x1^1");
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    Element a = random_element(rng, 3, 3, 4);
    CHECK(E(to_string(a), 3) == a);
  }
}

TEST_CASE("rank mismatch is a domain error") {
  CHECK(error_code([] { (void)(E("x1") * E("x2", 2)); }) == "rank-mismatch");
}
