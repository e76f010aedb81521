#include "sn/primes.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sn/errors.hpp"

namespace sn {

std::vector<int> complement(int n, const std::vector<int>& s) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  }
  return out;
}

std::vector<int> PrimeDescriptor::CN() const { return complement(n, N); }

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Irreducibility for the supported generator classes.
void check_irreducible(const LaurentElem& g) {
  std::vector<int> vars = g.vars();
  if (vars.size() == 1) {
    UniPoly p = *g.as_unipoly(vars[0]);
    auto f = uni_factor(uni_normalize_monic(p).first);
    if (f.size() != 1 || f[0].second != 1) {
      throw DomainError("not-prime", "principal generator " + to_string(g) + " is reducible");
    }
    return;
  }
  for (std::size_t k = 0; k < vars.size(); ++k) {
    bool linear = std::all_of(g.terms().begin(), g.terms().end(),
                              [k](const auto& t) { return t.first[k] == 0 || t.first[k] == 1; });
    if (!linear) continue;
    LaurentElem lead(vars), free_part(vars);
    for (const auto& [e, c] : g.terms()) {
      LaurentElem::Exponent f = e;
      f[k] = 0;
      (e[k] == 1 ? lead : free_part).add_term(f, c);
    }
    if (lead.is_constant() || free_part.is_constant()) return;
  }
  throw DomainError("descriptor-class", "descriptor class not implemented: cannot certify irreducibility of " +
                                            to_string(g));
}

QData normalize_q(const QData& q, const std::vector<int>& cn) {
  if (std::holds_alternative<QZero>(q)) return q;
  if (const auto* pt = std::get_if<QPoint>(&q)) {
    for (const auto& [i, v] : pt->coords) {
      if (!std::binary_search(cn.begin(), cn.end(), i)) {
        throw DomainError("bad-descriptor", "point coordinate x" + std::to_string(i) + " is not in CN");
      }
      if (sn::is_zero(v)) throw DomainError("not-in-torus", "point not in the torus");
    }
    if (pt->coords.empty()) return QZero{};
    return q;
  }
  LaurentElem g = std::get<QPrincipal>(q).g.trimmed();
  if (g.is_zero()) return QZero{};
  g = g.normalized().trimmed();
  if (g.is_constant()) throw DomainError("not-prime", "principal generator is a unit");
  if (!subset(g.vars(), cn)) throw DomainError("bad-descriptor", "principal generator uses variables outside CN");
  check_irreducible(g);
  if (g.vars().size() == 1) {
    UniPoly p = *g.as_unipoly(g.vars()[0]);
    if (*p.degree() == 1) return QPoint{{{g.vars()[0], -p.coeff(0) / p.coeff(1)}}};
  }
  return QPrincipal{g};
}

}  // namespace

PrimeDescriptor make_prime(int n, std::vector<int> N, QData q) {
  if (n < 1) throw DomainError("bad-rank", "rank must be at least 1");
  std::sort(N.begin(), N.end());
  N.erase(std::unique(N.begin(), N.end()), N.end());
  for (int i : N) {
    if (i < 1 || i > n) throw DomainError("index-out-of-range", "index " + std::to_string(i) + " out of range");
  }
  PrimeDescriptor p{n, std::move(N), QZero{}};
  p.q = normalize_q(q, p.CN());
  return p;
}

HeightReport laurent_height(const QData& q, std::size_t cn_size) {
  unsigned s = static_cast<unsigned>(cn_size);
  if (std::holds_alternative<QZero>(q)) return {0, s};
  if (std::holds_alternative<QPrincipal>(q)) return {1, s - 1};
  unsigned a = static_cast<unsigned>(std::get<QPoint>(q).coords.size());
  return {a, s - a};
}

HeightReport prime_height(const PrimeDescriptor& p) {
  std::size_t cn = p.CN().size();
  HeightReport l = laurent_height(p.q, cn);
  return {static_cast<unsigned>(cn) + l.ht, 2 * static_cast<unsigned>(p.N.size()) + l.cht};
}

namespace {

bool q_subset(const QData& q1, const QData& q2) {
  if (std::holds_alternative<QZero>(q1)) return true;
  if (std::holds_alternative<QZero>(q2)) return false;
  if (const auto* p1 = std::get_if<QPrincipal>(&q1)) {
    if (const auto* p2 = std::get_if<QPrincipal>(&q2)) return p1->g == p2->g;
    return q_contains(q2, p1->g);
  }
  const auto& a1 = std::get<QPoint>(q1).coords;
  if (std::holds_alternative<QPrincipal>(q2)) {
    // A principal prime containing x_a - c_a is generated by it, and such
    // generators are normalized to points.
    return false;
  }
  const auto& a2 = std::get<QPoint>(q2).coords;
  for (const auto& [i, v] : a1) {
    auto it = a2.find(i);
    if (it == a2.end() || it->second != v) return false;
  }
  return true;
}

}  // namespace

bool q_contains(const QData& q, const LaurentElem& f) {
  if (std::holds_alternative<QZero>(q)) return f.is_zero();
  if (const auto* p = std::get_if<QPrincipal>(&q)) return laurent_divides(p->g, f);
  return f.substitute(std::get<QPoint>(q).coords).is_zero();
}

bool prime_contains(const PrimeDescriptor& p1, const PrimeDescriptor& p2) {
  if (p1.n != p2.n) throw DomainError("rank-mismatch", "descriptors of different rank");
  return subset(p1.CN(), p2.CN()) && q_subset(p1.q, p2.q);
}

unsigned relative_height(const PrimeDescriptor& p1, const PrimeDescriptor& p2) {
  if (!prime_contains(p1, p2)) {
    throw DomainError("not-contained", to_string(p1) + " is not contained in " + to_string(p2));
  }
  return prime_height(p2).ht - prime_height(p1).ht;
}

namespace {

std::vector<PrimeDescriptor> cover_candidates(const PrimeDescriptor& p, const PrimeDescriptor& t) {
  std::vector<PrimeDescriptor> out;
  std::vector<int> cn = p.CN();
  for (int c : t.CN()) {
    if (std::binary_search(cn.begin(), cn.end(), c)) continue;
    std::vector<int> N = p.N;
    std::erase(N, c);
    out.push_back(PrimeDescriptor{p.n, N, p.q});
  }
  const auto* tp = std::get_if<QPoint>(&t.q);
  if (std::holds_alternative<QZero>(p.q)) {
    if (const auto* g = std::get_if<QPrincipal>(&t.q)) {
      if (subset(g->g.vars(), cn)) out.push_back(PrimeDescriptor{p.n, p.N, *g});
    }
  }
  if (tp && !std::holds_alternative<QPrincipal>(p.q)) {
    Point have;
    if (const auto* pp = std::get_if<QPoint>(&p.q)) have = pp->coords;
    for (const auto& [i, v] : tp->coords) {
      if (have.count(i) || !std::binary_search(cn.begin(), cn.end(), i)) continue;
      Point next = have;
      next.emplace(i, v);
      out.push_back(PrimeDescriptor{p.n, p.N, QPoint{next}});
    }
  }
  if (tp) {
    if (const auto* g = std::get_if<QPrincipal>(&p.q)) {
      const auto& vars = g->g.vars();
      if (vars.size() == 2 && subset(vars, cn)) {
        Point restricted;
        for (int v : vars) {
          auto it = tp->coords.find(v);
          if (it != tp->coords.end()) restricted.emplace(v, it->second);
        }
        if (restricted.size() == 2) out.push_back(PrimeDescriptor{p.n, p.N, QPoint{restricted}});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<PrimeDescriptor> catenary_refine(const std::vector<PrimeDescriptor>& chain) {
  if (chain.empty()) return {};
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (chain[k - 1] == chain[k] || !prime_contains(chain[k - 1], chain[k])) {
      throw DomainError("not-ascending", "chain is not strictly ascending at position " + std::to_string(k));
    }
  }
  std::vector<PrimeDescriptor> out{chain.front()};
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const PrimeDescriptor& target = chain[k];
    std::vector<PrimeDescriptor> path;
    std::function<bool(const PrimeDescriptor&)> walk = [&](const PrimeDescriptor& cur) -> bool {
      if (cur == target) return true;
      unsigned h = prime_height(cur).ht;
      for (const auto& r : cover_candidates(cur, target)) {
        if (prime_height(r).ht != h + 1 || !prime_contains(cur, r) || !prime_contains(r, target)) continue;
        path.push_back(r);
        if (walk(r)) return true;
        path.pop_back();
      }
      return false;
    };
    if (!walk(out.back())) {
      throw DomainError("descriptor-class", "descriptor class not implemented: no supported saturated chain from " +
                                                to_string(out.back()) + " to " + to_string(target));
    }
    out.insert(out.end(), path.begin(), path.end());
  }
  return out;
}

std::vector<PrimeDescriptor> height_one_primes(int n) {
  std::vector<PrimeDescriptor> out;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> N;
    for (int j = 1; j <= n; ++j) {
      if (j != i) N.push_back(j);
    }
    out.push_back(make_prime(n, N, QZero{}));
  }
  return out;
}

bool is_completely_prime(const PrimeDescriptor& p) { return p.N.empty(); }

PrimeDescriptor maximal_ideal_from_point(int n, const Point& point) {
  for (int i = 1; i <= n; ++i) {
    if (!point.count(i)) throw DomainError("bad-point", "point must give a coordinate for x" + std::to_string(i));
  }
  if (static_cast<int>(point.size()) != n) throw DomainError("bad-point", "point has coordinates outside 1..n");
  return make_prime(n, {}, QPoint{point});
}

bool prime_membership(const PrimeDescriptor& p, const Element& a) {
  if (a.rank() != p.n) throw DomainError("rank-mismatch", "element rank differs from the descriptor rank");
  std::vector<int> cn = p.CN();
  std::map<std::vector<unsigned>, LaurentElem> slices;
  for (const auto& [m, c] : a.terms()) {
    std::vector<unsigned> key;
    for (int i : p.N) {
      key.push_back(m.alpha(i - 1));
      key.push_back(m.beta(i - 1));
    }
    LaurentElem::Exponent e;
    for (int i : cn) e.push_back(static_cast<long>(m.alpha(i - 1)) - static_cast<long>(m.beta(i - 1)));
    slices.try_emplace(key, cn).first->second.add_term(e, c);
  }
  for (const auto& [key, f] : slices) {
    if (!q_contains(p.q, f)) return false;
  }
  return true;
}

std::string to_string(const PrimeDescriptor& p) {
  std::string out = "(N={";
  for (std::size_t k = 0; k < p.N.size(); ++k) out += (k ? "," : "") + std::to_string(p.N[k]);
  out += "}, ";
  if (std::holds_alternative<QZero>(p.q)) {
    out += "0";
  } else if (const auto* g = std::get_if<QPrincipal>(&p.q)) {
    out += "(" + to_string(g->g) + ")";
  } else {
    out += "point{";
    bool first = true;
    for (const auto& [i, v] : std::get<QPoint>(p.q).coords) {
      out += (first ? "" : ",") + std::to_string(i) + ":" + to_string(v);
      first = false;
    }
    out += "}";
  }
  return out + ")";
}

}  // namespace sn
