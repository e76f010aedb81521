#include "sn/cli/json_io.hpp"

#include "sn/cli/parser.hpp"
#include "sn/errors.hpp"

namespace sn::cli {

json rational_json(const Rational& r) { return sn::to_string(r); }

Rational rational_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw DomainError("bad-rational", "expected a rational string \"p/q\"");
}

json point_json(const Point& p) {
  json out = json::object();
  for (const auto& [i, v] : p) out[std::to_string(i)] = rational_json(v);
  return out;
}

Point point_from(const json& j) {
  if (!j.is_object()) throw DomainError("bad-json", "point must be an object {\"index\": \"value\"}");
  Point p;
  for (const auto& [k, v] : j.items()) {
    int i = 0;
    try {
      i = std::stoi(k);
    } catch (const std::exception&) {
      throw DomainError("bad-json", "point key '" + k + "' is not an index");
    }
    p[i] = rational_from(v);
  }
  return p;
}

json prime_json(const PrimeDescriptor& p) {
  json q;
  if (std::holds_alternative<QZero>(p.q)) {
    q = {{"kind", "zero"}};
  } else if (const auto* g = std::get_if<QPrincipal>(&p.q)) {
    q = {{"kind", "principal"}, {"poly", sn::to_string(g->g)}};
  } else {
    q = {{"kind", "point"}, {"coords", point_json(std::get<QPoint>(p.q).coords)}};
  }
  return {{"n", p.n}, {"N", p.N}, {"q", q}};
}

PrimeDescriptor prime_from(const json& j, int n) {
  if (!j.is_object() || !j.contains("N") || !j.contains("q")) {
    throw DomainError("bad-json", "prime must be {\"N\": [...], \"q\": {...}}");
  }
  if (j.contains("n")) n = j.at("n").get<int>();
  std::vector<int> N = j.at("N").get<std::vector<int>>();
  const json& q = j.at("q");
  std::string kind = q.value("kind", "");
  if (kind == "zero") return make_prime(n, N, QZero{});
  if (kind == "principal") return make_prime(n, N, QPrincipal{parse_laurent(q.at("poly").get<std::string>(), n)});
  if (kind == "point") return make_prime(n, N, QPoint{point_from(q.at("coords"))});
  throw DomainError("bad-json", "q.kind must be zero, principal or point");
}

json ideal_json(const IdealForm& I) {
  json out = {{"n", I.n}};
  std::visit(
      [&out](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IdealZero>) {
          out["kind"] = "zero";
        } else if constexpr (std::is_same_v<T, IdealWhole>) {
          out["kind"] = "whole";
        } else if constexpr (std::is_same_v<T, S1General>) {
          out["kind"] = "s1";
          out["a"] = sn::to_string(v.a, "x");
        } else if constexpr (std::is_same_v<T, Idempotent>) {
          out["kind"] = "idempotent";
          out["antichain"] = v.antichain;
        } else {
          out["kind"] = "prime";
          out["prime"] = prime_json(v.p);
        }
      },
      I.v);
  out["text"] = sn::to_string(I);
  return out;
}

IdealForm ideal_from(const json& j, int n) {
  if (!j.is_object() || !j.contains("kind")) throw DomainError("bad-json", "ideal must be an object with \"kind\"");
  if (j.contains("n")) n = j.at("n").get<int>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "zero") return zero_ideal(n);
  if (kind == "whole") return whole_ideal(n);
  if (kind == "s1") {
    if (n != 1) throw DomainError("rank-mismatch", "s1 ideals live in rank 1");
    return s1_ideal(parse_unipoly(j.value("a", std::string("0"))));
  }
  if (kind == "idempotent") {
    return idempotent_ideal(n, j.at("antichain").get<std::vector<std::vector<int>>>());
  }
  if (kind == "prime") return prime_ideal(prime_from(j.at("prime"), n));
  throw DomainError("bad-json", "unknown ideal kind '" + kind + "'");
}

json module_spec_json(const SimpleModuleSpec& s) {
  json out = {{"n", s.n}, {"N", s.N}, {"point", point_json(s.point)}};
  if (s.g) out["g"] = sn::to_string(*s.g, "x" + std::to_string(s.CN().at(0)));
  return out;
}

SimpleModuleSpec module_spec_from(const json& j, int n) {
  if (!j.is_object()) throw DomainError("bad-json", "module spec must be an object");
  if (j.contains("n")) n = j.at("n").get<int>();
  std::vector<int> N = j.value("N", std::vector<int>{});
  std::optional<UniPoly> g;
  if (j.contains("g")) {
    std::vector<int> cn = complement(n, N);
    if (cn.size() != 1) throw DomainError("bad-descriptor", "a polynomial g needs exactly one index outside N");
    g = parse_unipoly(j.at("g").get<std::string>(), cn[0]);
  }
  Point pt = j.contains("point") ? point_from(j.at("point")) : Point{};
  return make_module_spec(n, N, g, pt);
}

json mod_vector_json(const ModVector& v) {
  json terms = json::array();
  for (const auto& [key, c] : v.terms) {
    terms.push_back({{"exps", key.first}, {"r", key.second}, {"c", rational_json(c)}});
  }
  return terms;
}

ModVector mod_vector_from(const json& j, const SimpleModuleSpec& s) {
  if (!j.is_array()) throw DomainError("bad-json", "module vector must be a list of {exps, r, c}");
  ModVector v(s);
  for (const auto& t : j) {
    auto exps = t.at("exps").get<std::vector<unsigned>>();
    if (exps.size() != s.N.size()) throw DomainError("rank-mismatch", "exps must have one entry per index of N");
    v.add_term(exps, t.value("r", std::size_t{0}), rational_from(t.at("c")));
  }
  return v;
}

std::string to_string(const ModVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : v.terms) {
    Rational a = c;
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += sn::to_string(a);
    for (std::size_t k = 0; k < key.first.size(); ++k) {
      if (key.first[k]) out += "*x" + std::to_string(v.spec.N[k]) + "^" + std::to_string(key.first[k]);
    }
    if (key.second) out += "*t^" + std::to_string(key.second);
  }
  return out;
}

json exactness_json(const ExactnessReport& r, const std::string& space) {
  return {{"position", r.position}, {"space", space},       {"dim", r.dim},
          {"rank_in", r.rank_in},   {"rank_out", r.rank_out}, {"homology", r.homology_dim},
          {"window_caveat", r.window_caveat}};
}

json decomposed_json(const DecomposedElement& d) {
  json out = json::array();
  for (const auto& [sv, c] : d.terms()) {
    json secs = json::array();
    for (const auto& s : sv) secs.push_back(sn::to_string(s));
    out.push_back({rational_json(c), secs});
  }
  return out;
}

Sector parse_sector(const std::string& s) {
  try {
    if (s == "1") return Sector::unit();
    if (s.rfind("x^", 0) == 0) return Sector::xpow(static_cast<unsigned>(std::stoul(s.substr(2))));
    if (s.rfind("y^", 0) == 0) return Sector::ypow(static_cast<unsigned>(std::stoul(s.substr(2))));
    if (s.rfind("E(", 0) == 0 && s.back() == ')') {
      auto comma = s.find(',');
      if (comma != std::string::npos) {
        return Sector::mat(static_cast<unsigned>(std::stoul(s.substr(2, comma - 2))),
                           static_cast<unsigned>(std::stoul(s.substr(comma + 1))));
      }
    }
  } catch (const std::logic_error&) {
  }
  throw DomainError("bad-json", "bad sector '" + s + "'");
}

DecomposedElement decomposed_from(const json& j, int n) {
  if (!j.is_array()) throw DomainError("bad-json", "decomposed element must be [[coeff, [sectors]], ...]");
  DecomposedElement d(n);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw DomainError("bad-json", "term must be [coeff, [sectors]]");
    SectorVec sv;
    for (const auto& s : t[1]) sv.push_back(parse_sector(s.get<std::string>()));
    if (static_cast<int>(sv.size()) != n) throw DomainError("rank-mismatch", "one sector per tensor factor expected");
    d.add_term(sv, rational_from(t[0]));
  }
  return d;
}

json parse_json_arg(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError("bad-json", what + ": " + e.what());
  }
}

}  // namespace sn::cli
