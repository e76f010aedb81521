#pragma once

// Reference implementations kept independent of the library internals.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "sn/element.hpp"

namespace oracle {

using sn::Element;
using sn::Monomial;
using sn::Rational;

// Vectors of the polynomial module K[t_1..t_n]: exponent -> coefficient.
using Vec = std::map<std::vector<unsigned>, Rational>;

// x_i raises t_i, y_i lowers it and kills t_i^0; y^beta acts first.
inline Vec act(const Element& a, const Vec& v) {
  Vec out;
  int n = a.rank();
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [e, w] : v) {
      std::vector<unsigned> k = e;
      bool alive = true;
      for (int i = 0; i < n && alive; ++i) {
        if (k[i] < m.beta(i)) {
          alive = false;
        } else {
          k[i] = k[i] - m.beta(i) + m.alpha(i);
        }
      }
      if (alive) out[k] += c * w;
    }
  }
  std::erase_if(out, [](const auto& kv) { return sn::is_zero(kv.second); });
  return out;
}

inline unsigned max_beta(const Element& a, int i) {
  unsigned b = 0;
  for (const auto& [m, c] : a.terms()) b = std::max(b, m.beta(i));
  return b;
}

// c = a b as operators on the polynomial module, which is faithful. Past
// exponent M_i = the y-degrees of a, b and c in index i every side acts by
// the same translations, so basis vectors with k_i <= M_i decide equality.
inline bool product_matches(const Element& c, const Element& a, const Element& b) {
  int n = a.rank();
  std::vector<unsigned> bound(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bound[static_cast<std::size_t>(i)] = max_beta(a, i) + max_beta(b, i) + max_beta(c, i);
  std::vector<unsigned> k(static_cast<std::size_t>(n), 0);
  while (true) {
    Vec e;
    e[k] = Rational(1);
    if (act(c, e) != act(a, act(b, e))) return false;
    std::size_t i = 0;
    while (i < k.size() && k[i] == bound[i]) k[i++] = 0;
    if (i == k.size()) return true;
    ++k[i];
  }
}

inline Vec basis_vector(const std::vector<unsigned>& k) {
  Vec e;
  e[k] = Rational(1);
  return e;
}

// Families of subsets of {1..n} that are antichains, by brute force.
inline std::set<std::vector<std::vector<int>>> antichains(int n) {
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1U << i)) s.push_back(i + 1);
    }
    subsets.push_back(s);
  }
  std::set<std::vector<std::vector<int>>> out;
  for (unsigned long fam = 0; fam < (1UL << subsets.size()); ++fam) {
    std::vector<std::vector<int>> f;
    for (std::size_t k = 0; k < subsets.size(); ++k) {
      if (fam & (1UL << k)) f.push_back(subsets[k]);
    }
    bool ok = true;
    for (std::size_t a = 0; a < f.size() && ok; ++a) {
      for (std::size_t b = 0; b < f.size() && ok; ++b) {
        if (a != b && std::includes(f[b].begin(), f[b].end(), f[a].begin(), f[a].end())) ok = false;
      }
    }
    if (ok) out.insert(f);
  }
  return out;
}

// Rank of the span of a family of elements, by Gaussian elimination on
// coefficient rows.
inline std::size_t span_rank(const std::vector<Element>& family) {
  std::vector<std::vector<unsigned>> cols;
  for (const auto& a : family) {
    for (const auto& [m, c] : a.terms()) {
      if (std::find(cols.begin(), cols.end(), m.exps) == cols.end()) cols.push_back(m.exps);
    }
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& a : family) {
    std::vector<Rational> r(cols.size(), Rational(0));
    for (const auto& [m, c] : a.terms()) {
      r[static_cast<std::size_t>(std::find(cols.begin(), cols.end(), m.exps) - cols.begin())] = c;
    }
    rows.push_back(r);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols.size() && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = 0; k < cols.size(); ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// E_ij of S_1 written out directly: x^i y^j - x^(i+1) y^(j+1).
inline Element matrix_unit_1(unsigned i, unsigned j) {
  Element e(1);
  e.add_term(Monomial({i}, {j}), Rational(1));
  e.add_term(Monomial({i + 1}, {j + 1}), Rational(-1));
  return e;
}

}  // namespace oracle
