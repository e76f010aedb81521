#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sn/element.hpp"
#include "sn/ideals.hpp"
#include "sn/laurent.hpp"
#include "sn/unipoly.hpp"

namespace sn {

/// Exponent orders for polynomial vectors reuse the element convention:
/// larger total degree is larger; within a degree x1 < x2 < ...
struct PolyOrder {
  bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

/// Element of P_n = K[x_1..x_n].
struct PolyVector {
  int n = 1;
  std::map<std::vector<unsigned>, Rational, PolyOrder> terms;

  explicit PolyVector(int rank = 1) : n(rank) {}
  static PolyVector monomial(std::vector<unsigned> exps, const Rational& c = 1);
  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<unsigned>& e, const Rational& c);
  friend bool operator==(const PolyVector&, const PolyVector&) = default;
};

PolyVector act_on_poly(const Element& a, const PolyVector& p);
/// w = c^{-1} y^b for the top term c x^b of p; checks w * p = 1.
Element simplicity_witness(const PolyVector& p);

/// M_{N,m} = P_N (x) L_CN/m. The maximal ideal m is a rational point on CN
/// or, when |CN| = 1, a monic irreducible g with g(0) != 0.
struct SimpleModuleSpec {
  int n = 1;
  std::vector<int> N;
  std::optional<UniPoly> g;
  Point point;

  std::vector<int> CN() const;
  friend bool operator==(const SimpleModuleSpec&, const SimpleModuleSpec&) = default;
};

/// Validates; a linear g becomes a point.
SimpleModuleSpec make_module_spec(int n, std::vector<int> N, std::optional<UniPoly> g, Point point);
/// The module P_n.
SimpleModuleSpec polynomial_module(int n);

/// Residue field L_CN/m with basis 1, t, ..., t^{k-1}, t the class of x_c.
class ResidueField {
 public:
  explicit ResidueField(const SimpleModuleSpec& spec);
  std::size_t dim() const { return dim_; }
  /// Matrices of multiplication by x_c and x_c^{-1}, c in CN.
  const std::vector<std::vector<Rational>>& x_matrix(int c) const { return x_.at(c); }
  const std::vector<std::vector<Rational>>& xinv_matrix(int c) const { return xinv_.at(c); }
  std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
  std::vector<Rational> inverse(const std::vector<Rational>& a) const;

 private:
  std::size_t dim_ = 1;
  std::vector<int> cn_;
  std::map<int, std::vector<std::vector<Rational>>> x_, xinv_;
};

/// Element of M_{N,m}: keys are (exponents on N, residue basis index).
struct ModVector {
  SimpleModuleSpec spec;
  std::map<std::pair<std::vector<unsigned>, std::size_t>, Rational> terms;

  explicit ModVector(SimpleModuleSpec s) : spec(std::move(s)) {}
  /// The generator 1 (x) 1.
  static ModVector generator(const SimpleModuleSpec& s);
  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<unsigned>& e, std::size_t r, const Rational& c);
  friend bool operator==(const ModVector&, const ModVector&) = default;
};

ModVector act_on_module(const Element& a, const ModVector& v);
/// Element w with w * v = 1 (x) 1.
Element module_witness(const ModVector& v);

/// dim S_{n,<=i} (1 (x) 1) for i = 0..i_max.
std::vector<std::size_t> module_hilbert(const SimpleModuleSpec& spec, unsigned i_max);

struct ModuleInvariants {
  unsigned gk = 0;
  unsigned mult = 0;
  unsigned end_dim = 0;
  unsigned pd = 0;
};
/// Default sample range for the multiplicity fit.
unsigned default_hilbert_range(const SimpleModuleSpec& spec);
ModuleInvariants module_invariants(const SimpleModuleSpec& spec, unsigned i_max = 0);

IdealForm annihilator_of_simple(const SimpleModuleSpec& spec);

/// Truncated shift representation on e_beta, beta in {0..D}^n.
struct TruncatedRep {
  int n = 1;
  unsigned D = 6;
};

struct OracleReport {
  bool ok = true;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
};

/// Compares (ab) and a o b on every in-window basis vector.
OracleReport shift_oracle_report(const TruncatedRep& rep, const Element& a, const Element& b);
bool shift_oracle_check(const TruncatedRep& rep, const Element& a, const Element& b);

}  // namespace sn
