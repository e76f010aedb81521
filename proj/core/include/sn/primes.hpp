#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sn/element.hpp"
#include "sn/laurent.hpp"

namespace sn {

/// Zero ideal of L_CN.
struct QZero {
  friend bool operator==(const QZero&, const QZero&) = default;
};

/// Principal prime (g) of L_CN; g is irreducible and in associate normal form.
struct QPrincipal {
  LaurentElem g;
  friend bool operator==(const QPrincipal& a, const QPrincipal& b) { return a.g == b.g; }
};

/// (x_a - c_a : a in dom coords) in L_CN. With every index of CN present this
/// is a maximal ideal; a partial map gives a prime of height |dom coords|.
struct QPoint {
  Point coords;
  friend bool operator==(const QPoint&, const QPoint&) = default;
};

using QData = std::variant<QZero, QPrincipal, QPoint>;

/// The prime S_N (x) pi_CN^{-1}(q) of S_n.
struct PrimeDescriptor {
  int n = 1;
  std::vector<int> N;
  QData q;

  std::vector<int> CN() const;
  friend bool operator==(const PrimeDescriptor&, const PrimeDescriptor&) = default;
};

struct HeightReport {
  unsigned ht = 0;
  unsigned cht = 0;
};

/// Validates and normalizes: N sorted and in range, q supported and living on
/// CN, QPoint coordinates nonzero, empty QPoint -> QZero, linear univariate
/// principal generators -> QPoint. Unsupported generators raise
/// DomainError("descriptor-class").
PrimeDescriptor make_prime(int n, std::vector<int> N, QData q);

std::vector<int> complement(int n, const std::vector<int>& s);

/// ht_L and cht_L of q inside L_CN.
HeightReport laurent_height(const QData& q, std::size_t cn_size);
HeightReport prime_height(const PrimeDescriptor& p);

/// p1 subset of p2.
bool prime_contains(const PrimeDescriptor& p1, const PrimeDescriptor& p2);
/// ht(p2) - ht(p1); requires p1 subset of p2.
unsigned relative_height(const PrimeDescriptor& p1, const PrimeDescriptor& p2);
/// Saturated refinement of a strictly ascending chain.
std::vector<PrimeDescriptor> catenary_refine(const std::vector<PrimeDescriptor>& chain);

/// p_i = (N = [n] minus {i}, QZero), i = 1..n.
std::vector<PrimeDescriptor> height_one_primes(int n);
bool is_completely_prime(const PrimeDescriptor& p);
/// (N = empty, QPoint(point)); the point must cover 1..n with nonzero entries.
PrimeDescriptor maximal_ideal_from_point(int n, const Point& point);

/// Exact membership of a in p.
bool prime_membership(const PrimeDescriptor& p, const Element& a);
/// Membership of a Laurent polynomial on CN in q.
bool q_contains(const QData& q, const LaurentElem& f);

std::string to_string(const PrimeDescriptor& p);

}  // namespace sn
