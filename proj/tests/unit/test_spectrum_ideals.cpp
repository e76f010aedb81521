#include "../oracles/oracles.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "sn/decomposition.hpp"
#include "sn/ideals.hpp"
#include "sn/primes.hpp"

using namespace sn;
using testing::E;
using testing::error_code;
using testing::L;
using testing::U;

namespace {

IdealForm F1() { return s1_ideal(UniPoly()); }

PrimeDescriptor p_i(int n, int i) {
  std::vector<int> N;
  for (int k = 1; k <= n; ++k) {
    if (k != i) N.push_back(k);
  }
  return make_prime(n, N, QZero{});
}

PrimeDescriptor a_n(int n) { return make_prime(n, {}, QZero{}); }

PrimeDescriptor point_prime(int n, const Point& pt) { return make_prime(n, {}, QPoint{pt}); }

bool same(const IdealForm& a, const IdealForm& b) { return canonical(a) == canonical(b); }

}  // namespace

TEST_CASE("membership") {
  CHECK(ideal_membership(F1(), matrix_unit(1, 1, 5, 7)));
  IdealForm I = s1_ideal(U("x - 1"));
  CHECK(ideal_membership(I, E("x1 - 1")));
  CHECK_FALSE(ideal_membership(I, E("x1")));
  IdealForm p2 = idempotent_ideal(2, {{1}});
  CHECK(ideal_membership(p2, matrix_unit(2, 2, 0, 0)));
  CHECK_FALSE(ideal_membership(p2, E("x2", 2)));
}

TEST_CASE("products sums and intersections") {
  IdealForm a = s1_ideal(U("x - 1"));
  IdealForm b = s1_ideal(U("x - 2"));
  CHECK(same(ideal_product(a, b), s1_ideal(U("x^2 - 3*x + 2"))));
  CHECK(same(ideal_intersection(a, b), s1_ideal(U("x^2 - 3*x + 2"))));
  CHECK(same(ideal_sum(s1_ideal(U("(x - 1)^2")), s1_ideal(U("(x - 1)*(x - 2)"))), a));
  CHECK(same(ideal_product(a, whole_ideal(1)), a));
  CHECK(same(ideal_sum(a, zero_ideal(1)), a));
  CHECK(same(ideal_intersection(a, whole_ideal(1)), a));

  IdealForm P1 = prime_ideal(p_i(2, 1));
  IdealForm P2 = prime_ideal(p_i(2, 2));
  IdealForm FF = idempotent_ideal(2, {{}});
  CHECK(same(ideal_product(P1, P2), FF));
  CHECK(same(ideal_intersection(idempotent_ideal(2, {{1}}), idempotent_ideal(2, {{2}})), FF));
  CHECK(same(ideal_sum(P1, P2), prime_ideal(a_n(2))));
  CHECK(same(ideal_sum(P1, P2), idempotent_ideal(2, {{1}, {2}})));
}

TEST_CASE("S_1 ideals factor into maximals") {
  auto f = s1_factor_into_maximals(s1_ideal(U("x^2 - 1")));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == std::pair{s1_maximal(U("x - 1")), 1U});
  CHECK(f[1] == std::pair{s1_maximal(U("x + 1")), 1U});
  auto sq = s1_factor_into_maximals(s1_ideal(U("(x - 1)^2")));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].second == 2);
  auto irr = s1_factor_into_maximals(s1_ideal(U("x^2 - 2")));
  REQUIRE(irr.size() == 1);
  CHECK(irr[0].first == s1_maximal(U("x^2 - 2")));
  IdealForm prod = whole_ideal(1);
  for (const auto& [m, e] : f) {
    for (unsigned k = 0; k < e; ++k) prod = ideal_product(prod, prime_ideal(m));
  }
  CHECK(same(prod, s1_ideal(U("x^2 - 1"))));
  CHECK_FALSE(error_code([] { s1_ideal(U("x^2 - x")); }).empty());
}

TEST_CASE("height-one primes and containment") {
  CHECK(height_one_primes(1).size() == 1);
  CHECK(same(prime_ideal(height_one_primes(1)[0]), F1()));
  auto h2 = height_one_primes(2);
  REQUIRE(h2.size() == 2);
  CHECK(h2[0].N == std::vector<int>{2});
  CHECK(h2[1].N == std::vector<int>{1});
  CHECK(height_one_primes(3).size() == 3);

  CHECK(prime_contains(p_i(2, 1), a_n(2)));
  CHECK(prime_contains(make_prime(2, {}, QPrincipal{L("x1 - 1", 2)}), point_prime(2, {{1, 1}, {2, 2}})));
  CHECK(prime_contains(make_prime(2, {1}, QZero{}), point_prime(2, {{1, 1}, {2, 1}})));
  CHECK_FALSE(prime_contains(point_prime(2, {{1, 1}, {2, 1}}), make_prime(2, {1}, QZero{})));
}

TEST_CASE("heights") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : height_one_primes(n)) CHECK(prime_height(p).ht == 1);
    HeightReport a = prime_height(a_n(n));
    CHECK(a.ht == static_cast<unsigned>(n));
    CHECK(a.cht == static_cast<unsigned>(n));
    Point pt;
    for (int i = 1; i <= n; ++i) pt[i] = i;
    HeightReport m = prime_height(point_prime(n, pt));
    CHECK(m.ht == 2U * static_cast<unsigned>(n));
    CHECK(m.cht == 0);
  }
  CHECK(prime_height(make_prime(3, {1, 3}, QZero{})).ht == 1);
  CHECK(prime_height(make_prime(3, {2}, QZero{})).ht == 2);
  CHECK(relative_height(make_prime(2, {1, 2}, QZero{}), a_n(2)) == 2);
  CHECK(relative_height(a_n(2), a_n(2)) == 0);
  CHECK(relative_height(p_i(2, 1), point_prime(2, {{1, 1}, {2, 2}})) == 3);
}

TEST_CASE("catenary refinement") {
  PrimeDescriptor zero = make_prime(2, {1, 2}, QZero{});
  auto chain = catenary_refine({zero, a_n(2)});
  REQUIRE(chain.size() == 3);
  CHECK(chain[1] == p_i(2, 1));
  auto c1 = catenary_refine({make_prime(1, {1}, QZero{}), point_prime(1, {{1, 3}})});
  REQUIRE(c1.size() == 3);
  CHECK(same(prime_ideal(c1[1]), F1()));
  CHECK(catenary_refine({a_n(2)}) == std::vector<PrimeDescriptor>{a_n(2)});
}

TEST_CASE("idempotent lattice against brute force") {
  CHECK(enumerate_idempotent_ideals(1).size() == 3);
  for (int n = 1; n <= 4; ++n) {
    auto naive = oracle::antichains(n);
    auto ideals = enumerate_idempotent_ideals(n);
    CHECK(ideals.size() == naive.size());
    CHECK(count_idempotent_ideals(n) == static_cast<unsigned long>(naive.size()));
    std::set<std::vector<std::vector<int>>> seen, want;
    for (auto f : naive) {
      std::sort(f.begin(), f.end());
      want.insert(f);
    }
    for (const auto& I : ideals) {
      IdealForm c = canonical(I);
      if (const auto* id = std::get_if<Idempotent>(&c.v)) {
        auto f = id->antichain;
        std::sort(f.begin(), f.end());
        seen.insert(f);
      } else if (std::holds_alternative<IdealZero>(I.v)) {
        seen.insert(std::vector<std::vector<int>>{});
      } else if (std::holds_alternative<IdealWhole>(I.v)) {
        std::vector<int> all;
        for (int i = 1; i <= n; ++i) all.push_back(i);
        seen.insert(std::vector<std::vector<int>>{all});
      }
    }
    CHECK(seen == want);
  }
  CHECK(count_idempotent_ideals(5) == 7581);
}

TEST_CASE("minimal primes") {
  for (int n = 1; n <= 3; ++n) {
    auto mins = min_primes_idempotent(idempotent_ideal(n, {{}}));
    CHECK(mins.size() == static_cast<std::size_t>(n));
  }
  auto one = min_primes_idempotent(prime_ideal(p_i(2, 1)));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == p_i(2, 1));
  auto enc = min_primes_idempotent(idempotent_ideal(2, {{2}}));
  REQUIRE(enc.size() == 1);
  CHECK(enc[0] == p_i(2, 1));
}

TEST_CASE("Noetherian factors and complete primeness") {
  CHECK(is_noetherian_factor(prime_ideal(a_n(3))));
  CHECK_FALSE(is_noetherian_factor(prime_ideal(p_i(2, 1))));
  CHECK(is_noetherian_factor(whole_ideal(2)));
  CHECK(is_completely_prime(a_n(2)));
  CHECK_FALSE(is_completely_prime(p_i(2, 1)));
  CHECK(is_completely_prime(point_prime(2, {{1, 1}, {2, 2}})));
}

TEST_CASE("maximal ideals from points") {
  CHECK(same(prime_ideal(maximal_ideal_from_point(1, {{1, 1}})), prime_ideal(s1_maximal(U("x - 1")))));
  CHECK(prime_height(maximal_ideal_from_point(2, {{1, 1}, {2, 2}})).ht == 4);
  CHECK_FALSE(error_code([] { maximal_ideal_from_point(2, {{1, 1}, {2, 0}}); }).empty());
}

TEST_CASE("prime membership matches the Laurent image") {
  PrimeDescriptor m = point_prime(1, {{1, 2}});
  CHECK(prime_membership(m, E("x1 - 2")));
  CHECK(prime_membership(m, E("2*y1 - 1")));
  CHECK_FALSE(prime_membership(m, E("x1")));
  CHECK(prime_membership(p_i(2, 1), matrix_unit(2, 1, 0, 3)));
  CHECK_FALSE(prime_membership(p_i(2, 1), matrix_unit(2, 2, 0, 3)));
}
