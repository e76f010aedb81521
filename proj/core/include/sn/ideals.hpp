#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sn/element.hpp"
#include "sn/primes.hpp"
#include "sn/unipoly.hpp"

namespace sn {

struct IdealZero {
  friend bool operator==(const IdealZero&, const IdealZero&) = default;
};
struct IdealWhole {
  friend bool operator==(const IdealWhole&, const IdealWhole&) = default;
};
/// Rank 1: F + a(K[x] + K[y]) with a monic, a(0) != 0, non-scalar.
/// a = 0 stands for F itself.
struct S1General {
  UniPoly a;
  friend bool operator==(const S1General&, const S1General&) = default;
};
/// I_C = sum over S in C of the tensor ideal with S_1 on S and F elsewhere.
struct Idempotent {
  std::vector<std::vector<int>> antichain;
  friend bool operator==(const Idempotent&, const Idempotent&) = default;
};
struct PrimeForm {
  PrimeDescriptor p;
  friend bool operator==(const PrimeForm&, const PrimeForm&) = default;
};

using IdealVariant = std::variant<IdealZero, IdealWhole, S1General, Idempotent, PrimeForm>;

struct IdealForm {
  int n = 1;
  IdealVariant v;
  friend bool operator==(const IdealForm&, const IdealForm&) = default;
};

/// Canonical representative; equal ideals have equal canonical forms within
/// the supported classes.
IdealForm canonical(IdealForm I);

IdealForm zero_ideal(int n);
IdealForm whole_ideal(int n);
/// F + a(K[x]+K[y]) (a = 0 gives F).
IdealForm s1_ideal(const UniPoly& a);
IdealForm idempotent_ideal(int n, std::vector<std::vector<int>> antichain);
IdealForm prime_ideal(const PrimeDescriptor& p);

/// Maximal elements of a family of supports, in canonical order.
std::vector<std::vector<int>> maximal_supports(std::vector<std::vector<int>> family);

bool ideal_membership(const IdealForm& I, const Element& a);
IdealForm ideal_product(const IdealForm& I, const IdealForm& J);
IdealForm ideal_sum(const IdealForm& I, const IdealForm& J);
IdealForm ideal_intersection(const IdealForm& I, const IdealForm& J);
/// I subset of J for supported pairs.
bool ideal_contains(const IdealForm& I, const IdealForm& J);

/// Rank-1 proper ideal other than 0 and F as a product of maximal ideals.
std::vector<std::pair<PrimeDescriptor, unsigned>> s1_factor_into_maximals(const IdealForm& I);
/// The maximal ideal m_g = F + g(K[x]+K[y]) of S_1 as a descriptor.
PrimeDescriptor s1_maximal(const UniPoly& g);

/// Largest n accepted by enumerate_idempotent_ideals.
inline constexpr int kMaxEnumerateRank = 5;
/// Largest n accepted by count_idempotent_ideals.
inline constexpr int kMaxCountRank = 6;

std::vector<IdealForm> enumerate_idempotent_ideals(int n);
Integer count_idempotent_ideals(int n);

/// The idempotent primes p_M = sum of p_i over i in M, as descriptors.
std::vector<PrimeDescriptor> min_primes_idempotent(const IdealForm& I);

bool is_noetherian_factor(const IdealForm& I);

std::string to_string(const IdealForm& I);

}  // namespace sn
