#include <random>

#include "../oracles/oracles.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "sn/decomposition.hpp"

using namespace sn;
using testing::E;
using testing::L;

namespace {

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

TEST_CASE("matrix units") {
  CHECK(matrix_unit(1, 1, 2, 1) == E("x1^2*y1 - x1^3*y1^2"));
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j < 4; ++j) CHECK(matrix_unit(1, 1, i, j) == oracle::matrix_unit_1(i, j));
  }
  CHECK(E("x1*y1") == Element::one(1) - matrix_unit(1, 1, 0, 0));
  CHECK(E("x1^2*y1") == E("x1") - matrix_unit(1, 1, 1, 0));
  CHECK(Sector::mat(1, 2).degree() == 5);
}

TEST_CASE("matrix unit multiplication table") {
  for (unsigned a = 0; a < 3; ++a) {
    for (unsigned b = 0; b < 3; ++b) {
      for (unsigned c = 0; c < 3; ++c) {
        Element lhs = oracle::matrix_unit_1(a, b) * oracle::matrix_unit_1(b, c);
        CHECK(lhs == oracle::matrix_unit_1(a, c));
        CHECK((oracle::matrix_unit_1(a, b) * oracle::matrix_unit_1(b + 1, c)).is_zero());
      }
    }
  }
  CHECK(matrix_unit_product_check({1, 0}, {2, 1}, {2, 1}, {0, 3}));
  CHECK(matrix_unit_product_check({1, 0}, {2, 1}, {2, 2}, {0, 3}));
}

TEST_CASE("decomposition round trip") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      Element a = random_element(rng, n, 3, 4);
      DecomposedElement d = to_decomposed(a);
      CHECK(from_decomposed(d) == a);
      Element sum(n);
      for (const auto& [s, c] : d.terms()) sum += sector_vector_element(s).scaled(c);
      CHECK(sum == a);
    }
  }
}

TEST_CASE("Laurent projection and F-block") {
  CHECK(laurent_projection(matrix_unit(1, 1, 1, 2)).is_zero());
  CHECK(laurent_projection(E("x1^3*y1 - 2*x1*y1^2")) == L("x1^2 - 2*y1"));
  DecomposedElement f = f_block_part(E("x1*y1"), {1});
  DecomposedElement expect(1);
  expect.add_term({Sector::mat(0, 0)}, -1);
  CHECK(f == expect);
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    Element a = random_element(rng, 1, 3, 3);
    Element rest = a - from_decomposed(f_block_part(a, {1}));
    CHECK(laurent_projection(a) == laurent_projection(rest));
  }
}

TEST_CASE("slice coefficients") {
  SliceCoefficients s = extract_slice_coefficients(E("x1*y1", 2), 1);
  CHECK(s.lambda == Element::one(1));
  REQUIRE(s.lambda_mat.count({0, 0}) == 1);
  CHECK(s.lambda_mat.at({0, 0}) == -Element::one(1));
  SliceCoefficients t = extract_slice_coefficients(E("x1*y2", 2), 1);
  REQUIRE(t.lambda_plus.count(1) == 1);
  CHECK(t.lambda_plus.at(1) == E("y1"));
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Element a = random_element(rng, 3, 2, 4);
    for (int k = 1; k <= 3; ++k) CHECK(assemble_slice_coefficients(extract_slice_coefficients(a, k), k, 3) == a);
  }
}

TEST_CASE("annihilator and centralizer slices") {
  std::vector<Element> ann = left_annihilator_slice(E("x1"), 4);
  CHECK(ann.size() == 3);
  for (const auto& a : ann) CHECK((a * E("x1")).is_zero());
  std::vector<Element> expect = {oracle::matrix_unit_1(0, 0), oracle::matrix_unit_1(1, 0),
                                 oracle::matrix_unit_1(2, 0)};
  std::vector<Element> both = ann;
  both.insert(both.end(), expect.begin(), expect.end());
  CHECK(oracle::span_rank(both) == 3);

  std::vector<Element> cen = centralizer_slice(E("x1"), 3);
  CHECK(cen.size() == 4);
  for (const auto& a : cen) CHECK(a * E("x1") == E("x1") * a);
  std::vector<Element> powers = {E("1"), E("x1"), E("x1^2"), E("x1^3")};
  powers.insert(powers.end(), cen.begin(), cen.end());
  CHECK(oracle::span_rank(powers) == 4);
}
