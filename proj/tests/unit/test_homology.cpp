#include "doctest.h"
#include "helpers.hpp"
#include "sn/decomposition.hpp"
#include "sn/homology.hpp"

using namespace sn;
using testing::E;
using testing::error_code;

namespace {

// Dense product check of consecutive maps, independent of the sparse kernels.
bool composites_vanish(const TruncatedComplex& c) {
  for (std::size_t k = 0; k + 1 < c.maps.size(); ++k) {
    const SparseMatrix& a = c.maps[k];
    const SparseMatrix& b = c.maps[k + 1];
    for (std::size_t r = 0; r < b.rows; ++r) {
      for (std::size_t col = 0; col < a.cols; ++col) {
        Rational s = 0;
        for (std::size_t m = 0; m < a.rows; ++m) s += b.at(r, m) * a.at(m, col);
        if (s != 0) return false;
      }
    }
  }
  return true;
}

Integer choose(unsigned long n, unsigned long k) {
  Integer r = 1;
  for (unsigned long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("anres shapes") {
  TruncatedComplex c = build_anres(2, 4);
  REQUIRE(c.spaces.size() == 3);
  CHECK(c.spaces[0].size() == 1);
  for (unsigned d = 4; d <= 8; ++d) {
    TruncatedComplex cd = build_anres(2, d);
    // E_ab (x) E_ce with a + b + c + e + 4 <= d
    CHECK(Integer(cd.spaces[0].size()) == choose(d, 4));
  }
  CHECK_FALSE(error_code([] { build_anres(4, 4); }).empty());
}

TEST_CASE("anres is exact") {
  for (int n = 2; n <= 3; ++n) {
    TruncatedComplex c = build_anres(n, 6);
    CHECK(c.tag_diagonal);
    CHECK(check_d_squared(c));
    CHECK(composites_vanish(c));
    for (const auto& r : check_tag_diagonal_exactness(c)) CHECK(r.homology_dim == 0);
    long euler = 0;
    long sign = 1;
    for (const auto& s : c.spaces) {
      euler += sign * static_cast<long>(s.size());
      sign = -sign;
    }
    CHECK(euler == 0);
  }
}

TEST_CASE("single tag component of anres") {
  TruncatedComplex c = build_anres(2, 4);
  // The tag E_00 (x) E_00 spans 0 -> Q -> Q^2 -> Q -> 0.
  REQUIRE(c.spaces.size() == 3);
  std::vector<std::size_t> counts;
  for (const auto& s : c.spaces) {
    std::size_t k = 0;
    for (const auto& b : s) k += b.tag == c.spaces[0].at(0).tag ? 1 : 0;
    counts.push_back(k);
  }
  CHECK(counts == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("Koszul complex") {
  TruncatedComplex k = build_koszul_Mlambda(2, {1, 2}, 6);
  CHECK(check_d_squared(k));
  CHECK(composites_vanish(k));
  for (int n = 1; n <= 2; ++n) {
    std::vector<Rational> lambda(static_cast<std::size_t>(n), Rational(2));
    TruncatedComplex c = build_koszul_Mlambda(n, lambda, 6);
    auto reports = check_windowed_exactness(c);
    REQUIRE(!reports.empty());
    for (const auto& r : reports) {
      if (r.position + 1 == c.spaces.size()) {
        CHECK(Integer(r.homology_dim) == choose(6 + static_cast<unsigned long>(n), static_cast<unsigned long>(n)));
      } else if (r.homology_dim != 0) {
        CHECK(r.window_caveat);
      }
    }
  }
  CHECK_NOTHROW(build_koszul_Mlambda(2, {0, 3}, 4));
}

TEST_CASE("inverse on the F block") {
  Element e00 = matrix_unit(1, 1, 0, 0);
  Element e10 = matrix_unit(1, 1, 1, 0);
  CHECK(f_block_inverse(2, e00) == e00.scaled(Rational(-1, 2)));
  CHECK(f_block_inverse(2, e10) == e10.scaled(Rational(-1, 2)) + e00.scaled(Rational(-1, 4)));
  CHECK(f_block_inverse(1, Element(1)).is_zero());
  Element g = matrix_unit(1, 1, 2, 1) - matrix_unit(1, 1, 0, 3).scaled(3);
  Element f = f_block_inverse(Rational(-3, 2), g);
  CHECK((E("y1 + 3/2") * f) == g);
  CHECK_FALSE(error_code([] { f_block_inverse(2, E("x1")); }).empty());
}

TEST_CASE("cokernel of left multiplication") {
  CokerResult one = coker_principal_left(2, Element::one(1));
  CHECK(one.scalar == 1);
  CokerResult y = coker_principal_left(2, E("y1"));
  CHECK(y.scalar == 2);
  CHECK(y.certificate == Element::one(1));
  CokerResult e = coker_principal_left(2, matrix_unit(1, 1, 0, 0));
  CHECK(e.scalar == 0);
  CHECK(e.certificate == matrix_unit(1, 1, 0, 0).scaled(Rational(-1, 2)));
  Element a = E("x1^3*y1 - 2*y1^2 + 5*x1*y1^3 + 7");
  CokerResult r = coker_principal_left(Rational(1, 3), a);
  CHECK(a - Element::constant(1, r.scalar) == E("y1 - 1/3") * r.certificate);
}

TEST_CASE("projective splittings") {
  CHECK(check_projective_split(SplitKind::PnSummand, 1, 5));
  CHECK(check_projective_split(SplitKind::FnColumn, 1, 5));
  CHECK(check_projective_split(SplitKind::PnSummand, 2, 4));
  CHECK(check_projective_split(SplitKind::FnColumn, 2, 4));
}

TEST_CASE("F has no unit-like splitting element") {
  CHECK(nonsplit_witness_F(1, 6));
  CHECK(nonsplit_witness_F(1, 2));
  CHECK(nonsplit_witness_F(2, 4));
}
