#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "sn/laurent.hpp"
#include "sn/unipoly.hpp"

using namespace sn;
using testing::error_code;
using testing::L;
using testing::U;

namespace {

UniPoly product(const Factorization& f) {
  UniPoly p = UniPoly::constant(1);
  for (const auto& [g, m] : f) p = p * pow(g, m);
  return p;
}

// Rational roots p/q of an integer-coefficient polynomial by exhaustive search.
bool has_small_rational_root(const UniPoly& p, long bound) {
  for (long num = -bound; num <= bound; ++num) {
    for (long den = 1; den <= bound; ++den) {
      if (p.eval(Rational(num, den)) == 0) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("monic normalization") {
  auto [m1, c1] = uni_normalize_monic(U("2*x^2 - 2"));
  CHECK(m1 == U("x^2 - 1"));
  CHECK(c1 == 2);
  auto [m2, c2] = uni_normalize_monic(U("-3*x^3 + 6*x"));
  CHECK(m2 == U("x^3 - 2*x"));
  CHECK(c2 == -3);
  CHECK(error_code([] { uni_normalize_monic(UniPoly()); }) == "zero-input");
}

TEST_CASE("factorization over Q") {
  Factorization f = uni_factor(U("x^2 - 1"));
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == U("x - 1"));
  CHECK(f[1].first == U("x + 1"));
  CHECK(product(f) == U("x^2 - 1"));

  Factorization irr = uni_factor(U("x^2 - 2"));
  REQUIRE(irr.size() == 1);
  CHECK(irr[0] == std::pair{U("x^2 - 2"), 1U});

  Factorization sq = uni_factor(U("(x - 1)^2"));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0] == std::pair{U("x - 1"), 2U});
}

TEST_CASE("factorization recovers random products") {
  const std::vector<UniPoly> pool = {U("x - 1"),       U("x + 2"),     U("x - 1/2"),  U("x^2 + 1"),
                                     U("x^2 - 2"),     U("x^2 + x + 1"), U("x^3 - 2"), U("x^2 - 3*x + 5")};
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly p = UniPoly::constant(1);
    std::size_t deg = 0;
    while (deg < 5) {
      const UniPoly& g = pool[rng() % pool.size()];
      p = p * g;
      deg += *g.degree();
    }
    if (*p.degree() > kMaxFactorDegree) continue;
    Factorization f = uni_factor(p);
    CHECK(product(f) == p);
    for (std::size_t k = 0; k + 1 < f.size(); ++k) CHECK(factor_order_less(f[k].first, f[k + 1].first));
    for (const auto& [g, m] : f) {
      CHECK(g.is_monic());
      if (*g.degree() >= 2 && *g.degree() <= 3) CHECK_FALSE(has_small_rational_root(g, 6));
    }
  }
}

TEST_CASE("factor rejects unsupported input") {
  CHECK_FALSE(error_code([] { uni_factor(U("2*x - 1")); }).empty());
  CHECK_FALSE(error_code([] { uni_factor(U("3")); }).empty());
  CHECK_FALSE(error_code([] { uni_factor(U("x^9 + 1")); }).empty());
}

TEST_CASE("gcd and division") {
  CHECK(gcd(U("x^2 - 1"), U("x^2 - 3*x + 2")) == U("x - 1"));
  CHECK(lcm(U("x - 1"), U("x - 2")) == U("x^2 - 3*x + 2"));
  DivMod qr = divmod(U("x^3 + 1"), U("x - 2"));
  CHECK(qr.remainder == UniPoly::constant(9));
  CHECK(qr.quotient * U("x - 2") + qr.remainder == U("x^3 + 1"));
}

TEST_CASE("Laurent evaluation") {
  LaurentElem f = L("x1 + y1");
  CHECK(f.eval(Point{{1, Rational(2)}}) == Rational(5, 2));
  CHECK_FALSE(error_code([&] { f.eval(Point{{1, Rational(0)}}); }).empty());
  LaurentElem g = L("x1^2*y2 - 3", 2);
  CHECK(g.eval(Point{{1, Rational(3)}, {2, Rational(-1, 2)}}) == -21);
}

TEST_CASE("Laurent text reparses") {
  const std::vector<std::string> samples = {"x1^2 - 2", "y1^3 + 1/2*x2", "x1*y2 - x2*y1 + 7"};
  for (const auto& s : samples) {
    LaurentElem f = L(s, 2);
    CHECK(L(to_string(f), 2) == f);
  }
  CHECK(to_string(L("x1^2 - 2")) == "-2 + 1*x1^2");
}
