#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sn/element.hpp"
#include "sn/unipoly.hpp"

namespace sn::cli {

/// Seeded source shared by the sweeps and checks; draws are bounded by
/// modulo so a seed gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  /// Uniform-ish integer in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return (gen_() & 1U) != 0; }
  Rational nonzero_rational(long bound);
  Monomial monomial(int n, unsigned max_exp);
  /// Sum of up to `terms` random monomials with small integer coefficients.
  Element element(int n, unsigned max_exp, unsigned terms);
  /// Monic polynomial of degree in [1, max_deg] with a(0) != 0.
  UniPoly monic_unit_free(unsigned max_deg, long bound);

 private:
  std::mt19937_64 gen_;
};

}  // namespace sn::cli
