#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sn/element.hpp"
#include "sn/laurent.hpp"

namespace sn {

/// One summand of S_1 = K + xK[x] + yK[y] + F.
struct Sector {
  enum class Kind { Unit, XPow, YPow, MatUnit };
  Kind kind = Kind::Unit;
  unsigned i = 0;
  unsigned j = 0;

  static Sector unit() { return {}; }
  static Sector xpow(unsigned e);
  static Sector ypow(unsigned e);
  static Sector mat(unsigned i, unsigned j) { return {Kind::MatUnit, i, j}; }

  bool is_mat() const { return kind == Kind::MatUnit; }
  /// Filtration degree of the sector's normal form; deg E_ij = i + j + 2.
  unsigned degree() const;

  friend bool operator==(const Sector&, const Sector&) = default;
  friend auto operator<=>(const Sector&, const Sector&) = default;
};

using SectorVec = std::vector<Sector>;

class DecomposedElement {
 public:
  using TermMap = std::map<SectorVec, Rational>;

  explicit DecomposedElement(int n = 1) : n_(n) {}
  int rank() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const SectorVec& s, const Rational& c);

  friend bool operator==(const DecomposedElement&, const DecomposedElement&) = default;

 private:
  int n_;
  TermMap terms_;
};

/// Per-factor expansion of x^a y^b into sectors.
std::vector<std::pair<Sector, Rational>> expand_factor(unsigned a, unsigned b);

/// The S_1 element of a sector.
Element sector_element(const Sector& s);
/// Tensor product of per-factor sector elements.
Element sector_vector_element(const SectorVec& s);
unsigned sector_vector_degree(const SectorVec& s);

/// E_ij placed in tensor factor `factor` (1-based).
Element matrix_unit(int n, int factor, unsigned i, unsigned j);
/// E_{alpha beta} = tensor product of E_{alpha_k beta_k}.
Element matrix_unit(const std::vector<unsigned>& alpha, const std::vector<unsigned>& beta);

DecomposedElement to_decomposed(const Element& a);
Element from_decomposed(const DecomposedElement& d);

/// E_ab E_cr == delta_{b,c} E_ar.
bool matrix_unit_product_check(const std::vector<unsigned>& alpha, const std::vector<unsigned>& beta,
                               const std::vector<unsigned>& gamma, const std::vector<unsigned>& rho);

/// pi: x^a y^b -> x^(a-b) in L_n.
LaurentElem laurent_projection(const Element& a);

/// Part of to_decomposed(a) whose sectors are MatUnit at every index of
/// `subset` (1-based).
DecomposedElement f_block_part(const Element& a, const std::vector<int>& subset);

struct SliceCoefficients {
  Element lambda;
  std::map<unsigned, Element> lambda_plus;
  std::map<unsigned, Element> lambda_minus;
  std::map<std::pair<unsigned, unsigned>, Element> lambda_mat;
};

/// Coefficients in a = l + sum(x^i (x) l_i + y^i (x) l_-i) + sum E_ij (x) l_ij
/// with `factor` split off; coefficients have rank n-1.
SliceCoefficients extract_slice_coefficients(const Element& a, int factor);
/// Inverse of extract_slice_coefficients.
Element assemble_slice_coefficients(const SliceCoefficients& s, int factor, int n);

/// Basis of {a in S_{n,<=d} : a g = 0}.
std::vector<Element> left_annihilator_slice(const Element& g, unsigned d);
/// Basis of {a in S_{n,<=d} : a g = g a}.
std::vector<Element> centralizer_slice(const Element& g, unsigned d);

/// Embeds an element of rank m into rank n at the given factor positions
/// (1-based, one per source factor).
Element embed(const Element& a, int n, const std::vector<int>& positions);

std::string to_string(const Sector& s);
std::string to_string(const DecomposedElement& d);

}  // namespace sn
