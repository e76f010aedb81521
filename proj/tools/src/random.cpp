#include "sn/cli/random.hpp"

namespace sn::cli {

Rational Rng::nonzero_rational(long bound) {
  long p = 0;
  while (p == 0) p = range(-bound, bound);
  Rational r(Integer(p), Integer(range(1, 3)));
  r.canonicalize();
  return r;
}

Monomial Rng::monomial(int n, unsigned max_exp) {
  Monomial m;
  m.exps.resize(2 * static_cast<std::size_t>(n));
  for (auto& e : m.exps) e = static_cast<unsigned>(range(0, max_exp));
  return m;
}

Element Rng::element(int n, unsigned max_exp, unsigned terms) {
  Element a(n);
  long k = range(1, terms);
  for (long t = 0; t < k; ++t) {
    long c = 0;
    while (c == 0) c = range(-4, 4);
    a.add_term(monomial(n, max_exp), c);
  }
  return a;
}

UniPoly Rng::monic_unit_free(unsigned max_deg, long bound) {
  std::size_t deg = static_cast<std::size_t>(range(1, max_deg));
  std::vector<Rational> c(deg + 1);
  for (std::size_t k = 0; k < deg; ++k) c[k] = range(-bound, bound);
  while (sn::is_zero(c[0])) c[0] = range(-bound, bound);
  c[deg] = 1;
  return UniPoly(c);
}

}  // namespace sn::cli
