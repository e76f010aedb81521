#include "sn/cli/commands.hpp"

#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "sn/cli/checks.hpp"
#include "sn/cli/parser.hpp"
#include "sn/cli/random.hpp"
#include "sn/decomposition.hpp"
#include "sn/errors.hpp"
#include "sn/homology.hpp"
#include "sn/ideals.hpp"
#include "sn/primes.hpp"
#include "sn/representations.hpp"

namespace sn::cli {

namespace {

void need(const Options& o, std::size_t k, const char* what) {
  if (o.args.size() != k) throw UsageError(std::string("expected ") + what);
}

CommandResult ok(json payload, std::string text = {}) {
  CommandResult r;
  r.payload = std::move(payload);
  r.text = std::move(text);
  return r;
}

Element elem(const Options& o, const std::string& s) { return parse_element(s, o.ctx()); }

json elem_json(const Element& e) { return sn::to_string(e); }

std::vector<int> index_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad index list '" + s + "'");
    }
  }
  return out;
}

std::vector<unsigned> multi_index(const std::string& s) {
  std::vector<unsigned> out;
  for (int v : index_list(s)) {
    if (v < 0) throw UsageError("multi-index entries must be nonnegative");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

unsigned uint_arg(const std::string& s) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(s, &used);
    if (used != s.size() || s[0] == '-') throw std::invalid_argument(s);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw UsageError("expected a nonnegative integer, got '" + s + "'");
  }
}

PrimeDescriptor prime_arg(const Options& o, const std::string& s) { return prime_from(parse_json_arg(s, "prime"), o.n); }

std::vector<PrimeDescriptor> primes_arg(const Options& o) {
  std::vector<PrimeDescriptor> out;
  for (const auto& s : o.primes) out.push_back(prime_arg(o, s));
  for (const auto& s : o.args) {
    json j = parse_json_arg(s, "prime");
    if (j.is_array()) {
      for (const auto& p : j) out.push_back(prime_from(p, o.n));
    } else {
      out.push_back(prime_from(j, o.n));
    }
  }
  return out;
}

IdealForm ideal_arg(const Options& o, const std::string& s) { return ideal_from(parse_json_arg(s, "ideal"), o.n); }

SimpleModuleSpec module_arg(const Options& o) {
  if (!o.module) throw UsageError("--module is required");
  return module_spec_from(parse_json_arg(*o.module, "module"), o.n);
}

PolyVector poly_vector_arg(const Options& o, const std::string& s) {
  Element e = elem(o, s);
  PolyVector p(o.n);
  for (const auto& [m, c] : e.terms()) {
    std::vector<unsigned> ex(static_cast<std::size_t>(o.n));
    for (int i = 0; i < o.n; ++i) {
      if (m.beta(i) != 0) throw DomainError("not-polynomial", "polynomial vectors use x generators only");
      ex[static_cast<std::size_t>(i)] = m.alpha(i);
    }
    p.add_term(ex, c);
  }
  return p;
}

std::string poly_vector_text(const PolyVector& p) {
  Element e(p.n);
  for (const auto& [ex, c] : p.terms) e.add_term(Monomial(ex, std::vector<unsigned>(ex.size(), 0)), c);
  return sn::to_string(e);
}

Rational rational_arg(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("bad-rational", "bad rational '" + s + "'");
  }
}

std::vector<Rational> rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rational_arg(item));
  return out;
}

// ---- core algebra ---------------------------------------------------------

CommandResult cmd_normalize(const Options& o) {
  need(o, 1, "one expression");
  return ok(elem_json(elem(o, o.args[0])));
}

CommandResult cmd_mul(const Options& o) {
  if (o.args.size() < 2) throw UsageError("expected at least two expressions");
  Element acc = elem(o, o.args[0]);
  for (std::size_t k = 1; k < o.args.size(); ++k) acc = multiply(o.ctx(), acc, elem(o, o.args[k]));
  return ok(elem_json(acc));
}

CommandResult cmd_eta(const Options& o) {
  need(o, 1, "one expression");
  return ok(elem_json(involution(elem(o, o.args[0]))));
}

CommandResult cmd_degree(const Options& o) {
  need(o, 1, "one expression");
  auto d = filtration_degree(elem(o, o.args[0]));
  return d ? ok(*d) : ok(nullptr, "none");
}

CommandResult cmd_zgrade(const Options& o) {
  need(o, 1, "one expression");
  json out = json::object();
  std::string text;
  for (const auto& [w, e] : zgrade_split(elem(o, o.args[0]))) {
    std::string key = "(";
    for (std::size_t k = 0; k < w.size(); ++k) key += (k ? "," : "") + std::to_string(w[k]);
    key += ")";
    out[key] = elem_json(e);
    text += key + ": " + sn::to_string(e) + "\n";
  }
  if (!text.empty()) text.pop_back();
  return ok(out, text);
}

CommandResult cmd_gr(const Options& o) {
  need(o, 1, "one expression");
  return ok(elem_json(gr_symbol(elem(o, o.args[0]))));
}

CommandResult cmd_hilbert(const Options& o) {
  need(o, 1, "the degree i");
  HilbertDim h = hilbert_dim(o.n, uint_arg(o.args[0]));
  return ok({{"n", o.n}, {"i", uint_arg(o.args[0])}, {"dim", sn::to_string(h.binomial)}, {"enumerated", sn::to_string(h.enumerated)}},
            sn::to_string(h.binomial));
}

// ---- decomposition --------------------------------------------------------

CommandResult cmd_matunit(const Options& o) {
  need(o, 3, "FACTOR I J");
  return ok(elem_json(matrix_unit(o.n, static_cast<int>(uint_arg(o.args[0])), uint_arg(o.args[1]), uint_arg(o.args[2]))));
}

CommandResult cmd_decompose(const Options& o) {
  need(o, 1, "one expression");
  DecomposedElement d = to_decomposed(elem(o, o.args[0]));
  return ok(decomposed_json(d), sn::to_string(d));
}

CommandResult cmd_recompose(const Options& o) {
  need(o, 1, "a decomposed element as JSON");
  return ok(elem_json(from_decomposed(decomposed_from(parse_json_arg(o.args[0], "decomposed element"), o.n))));
}

CommandResult cmd_matunit_check(const Options& o) {
  need(o, 4, "four multi-indices ALPHA BETA GAMMA RHO");
  bool r = matrix_unit_product_check(multi_index(o.args[0]), multi_index(o.args[1]), multi_index(o.args[2]),
                                     multi_index(o.args[3]));
  return ok(r);
}

CommandResult cmd_pi(const Options& o) {
  need(o, 1, "one expression");
  return ok(sn::to_string(laurent_projection(elem(o, o.args[0]))));
}

CommandResult cmd_fblock(const Options& o) {
  need(o, 1, "one expression");
  std::vector<int> subset;
  if (o.subset) {
    subset = index_list(*o.subset);
  } else {
    for (int i = 1; i <= o.n; ++i) subset.push_back(i);
  }
  DecomposedElement d = f_block_part(elem(o, o.args[0]), subset);
  return ok(decomposed_json(d), sn::to_string(d));
}

CommandResult cmd_slice(const Options& o) {
  need(o, 1, "one expression");
  SliceCoefficients s = extract_slice_coefficients(elem(o, o.args[0]), o.factor.value_or(1));
  json plus = json::object(), minus = json::object(), mat = json::object();
  for (const auto& [i, e] : s.lambda_plus) plus[std::to_string(i)] = elem_json(e);
  for (const auto& [i, e] : s.lambda_minus) minus[std::to_string(i)] = elem_json(e);
  for (const auto& [ij, e] : s.lambda_mat) mat[std::to_string(ij.first) + "," + std::to_string(ij.second)] = elem_json(e);
  return ok({{"lambda", elem_json(s.lambda)}, {"plus", plus}, {"minus", minus}, {"mat", mat}});
}

CommandResult cmd_annihilator(const Options& o) {
  need(o, 1, "a generator x<i> or y<i>");
  json out = json::array();
  for (const auto& e : left_annihilator_slice(elem(o, o.args[0]), o.trunc)) out.push_back(elem_json(e));
  return ok(out);
}

CommandResult cmd_centralizer(const Options& o) {
  need(o, 1, "one expression");
  json out = json::array();
  for (const auto& e : centralizer_slice(elem(o, o.args[0]), o.trunc)) out.push_back(elem_json(e));
  return ok(out);
}

// ---- scalar polynomials ---------------------------------------------------

CommandResult cmd_poly_monic(const Options& o) {
  need(o, 1, "a polynomial in x");
  auto [p, c] = uni_normalize_monic(parse_unipoly(o.args[0]));
  return ok({{"poly", sn::to_string(p, "x")}, {"scale", rational_json(c)}},
            sn::to_string(p, "x") + " (scale " + sn::to_string(c) + ")");
}

CommandResult cmd_poly_factor(const Options& o) {
  need(o, 1, "a polynomial in x");
  json out = json::array();
  std::string text;
  for (const auto& [f, m] : uni_factor(parse_unipoly(o.args[0]))) {
    out.push_back({{"factor", sn::to_string(f, "x")}, {"multiplicity", m}});
    text += (text.empty() ? "" : " * ") + std::string("(") + sn::to_string(f, "x") + ")^" + std::to_string(m);
  }
  return ok(out, text.empty() ? "1" : text);
}

CommandResult cmd_laurent_eval(const Options& o) {
  need(o, 1, "a Laurent polynomial");
  if (!o.point) throw UsageError("--point is required");
  return ok(rational_json(parse_laurent(o.args[0], o.n).eval(point_from(parse_json_arg(*o.point, "point")))));
}

// ---- ideals and spectrum --------------------------------------------------

CommandResult ideal_result(const IdealForm& I) {
  json j = ideal_json(I);
  return ok(j, j["text"].get<std::string>());
}

CommandResult cmd_ideal_mul(const Options& o) {
  need(o, 2, "two ideals");
  return ideal_result(ideal_product(ideal_arg(o, o.args[0]), ideal_arg(o, o.args[1])));
}

CommandResult cmd_ideal_sum(const Options& o) {
  need(o, 2, "two ideals");
  return ideal_result(ideal_sum(ideal_arg(o, o.args[0]), ideal_arg(o, o.args[1])));
}

CommandResult cmd_ideal_cap(const Options& o) {
  need(o, 2, "two ideals");
  return ideal_result(ideal_intersection(ideal_arg(o, o.args[0]), ideal_arg(o, o.args[1])));
}

CommandResult cmd_ideal_member(const Options& o) {
  need(o, 2, "an ideal and an expression");
  IdealForm I = ideal_arg(o, o.args[0]);
  Options sub = o;
  sub.n = I.n;
  return ok(ideal_membership(I, elem(sub, o.args[1])));
}

CommandResult cmd_ideal_factor(const Options& o) {
  need(o, 1, "one ideal");
  json out = json::array();
  std::string text;
  for (const auto& [p, m] : s1_factor_into_maximals(ideal_arg(o, o.args[0]))) {
    out.push_back({{"maximal", prime_json(p)}, {"multiplicity", m}});
    text += (text.empty() ? "" : " * ") + sn::to_string(p) + "^" + std::to_string(m);
  }
  return ok(out, text);
}

CommandResult cmd_spec_ht(const Options& o) {
  auto ps = primes_arg(o);
  if (ps.size() != 1) throw UsageError("expected one prime");
  HeightReport h = prime_height(ps[0]);
  return ok({{"ht", h.ht}, {"cht", h.cht}}, "ht " + std::to_string(h.ht) + ", cht " + std::to_string(h.cht));
}

CommandResult cmd_spec_contains(const Options& o) {
  auto ps = primes_arg(o);
  if (ps.size() != 2) throw UsageError("expected two primes");
  return ok(prime_contains(ps[0], ps[1]));
}

CommandResult cmd_spec_relht(const Options& o) {
  auto ps = primes_arg(o);
  if (ps.size() != 2) throw UsageError("expected two primes");
  return ok(relative_height(ps[0], ps[1]));
}

CommandResult cmd_spec_refine(const Options& o) {
  auto ps = primes_arg(o);
  if (ps.empty()) throw UsageError("expected an ascending chain of primes");
  json out = json::array();
  std::string text;
  for (const auto& p : catenary_refine(ps)) {
    out.push_back(prime_json(p));
    text += (text.empty() ? "" : "\n") + sn::to_string(p);
  }
  return ok(out, text);
}

CommandResult cmd_spec_height_one(const Options& o) {
  need(o, 0, "no arguments");
  json out = json::array();
  std::string text;
  for (const auto& p : height_one_primes(o.n)) {
    out.push_back(prime_json(p));
    text += (text.empty() ? "" : "\n") + sn::to_string(p);
  }
  return ok(out, text);
}

CommandResult cmd_spec_completely_prime(const Options& o) {
  auto ps = primes_arg(o);
  if (ps.size() != 1) throw UsageError("expected one prime");
  return ok(is_completely_prime(ps[0]));
}

CommandResult cmd_spec_maximals(const Options& o) {
  need(o, 0, "no positional arguments");
  if (!o.point) throw UsageError("--point is required");
  PrimeDescriptor p = maximal_ideal_from_point(o.n, point_from(parse_json_arg(*o.point, "point")));
  return ok(prime_json(p), sn::to_string(p));
}

CommandResult cmd_lattice_enum(const Options& o) {
  need(o, 0, "no arguments");
  json out = json::array();
  std::string text;
  for (const auto& I : enumerate_idempotent_ideals(o.n)) {
    out.push_back(ideal_json(I));
    text += (text.empty() ? "" : "\n") + sn::to_string(I);
  }
  return ok(out, text);
}

CommandResult cmd_lattice_count(const Options& o) {
  need(o, 0, "no arguments");
  Integer c = count_idempotent_ideals(o.n);
  return ok(c.fits_slong_p() ? json(c.get_si()) : json(sn::to_string(c)), sn::to_string(c));
}

CommandResult cmd_lattice_minprimes(const Options& o) {
  need(o, 1, "one idempotent ideal");
  json out = json::array();
  std::string text;
  for (const auto& p : min_primes_idempotent(ideal_arg(o, o.args[0]))) {
    out.push_back(prime_json(p));
    text += (text.empty() ? "" : "\n") + sn::to_string(p);
  }
  return ok(out, text);
}

CommandResult cmd_noeth_factor(const Options& o) {
  need(o, 1, "one ideal");
  return ok(is_noetherian_factor(ideal_arg(o, o.args[0])));
}

// ---- representations ------------------------------------------------------

CommandResult cmd_act_poly(const Options& o) {
  need(o, 2, "an element and a polynomial in x");
  return ok(poly_vector_text(act_on_poly(elem(o, o.args[0]), poly_vector_arg(o, o.args[1]))));
}

ModVector vector_arg(const Options& o, const SimpleModuleSpec& s) {
  if (!o.vector) return ModVector::generator(s);
  return mod_vector_from(parse_json_arg(*o.vector, "vector"), s);
}

CommandResult cmd_act_module(const Options& o) {
  need(o, 1, "an element");
  SimpleModuleSpec s = module_arg(o);
  ModVector v = act_on_module(elem(o, o.args[0]), vector_arg(o, s));
  return ok(mod_vector_json(v), to_string(v));
}

CommandResult cmd_witness(const Options& o) {
  if (o.module) {
    need(o, 0, "no positional arguments with --module");
    return ok(elem_json(module_witness(vector_arg(o, module_arg(o)))));
  }
  need(o, 1, "a nonzero polynomial in x");
  return ok(elem_json(simplicity_witness(poly_vector_arg(o, o.args[0]))));
}

CommandResult cmd_module_hilbert(const Options& o) {
  need(o, 0, "no positional arguments");
  SimpleModuleSpec s = module_arg(o);
  auto h = module_hilbert(s, o.imax.value_or(default_hilbert_range(s)));
  std::string text;
  for (auto v : h) text += (text.empty() ? "" : " ") + std::to_string(v);
  return ok(h, text);
}

CommandResult cmd_module_inv(const Options& o) {
  need(o, 0, "no positional arguments");
  ModuleInvariants m = module_invariants(module_arg(o), o.imax.value_or(0));
  return ok({{"gk", m.gk}, {"mult", m.mult}, {"end_dim", m.end_dim}, {"pd", m.pd}},
            "gk " + std::to_string(m.gk) + ", mult " + std::to_string(m.mult) + ", end_dim " + std::to_string(m.end_dim) +
                ", pd " + std::to_string(m.pd));
}

CommandResult cmd_module_ann(const Options& o) {
  need(o, 0, "no positional arguments");
  return ideal_result(annihilator_of_simple(module_arg(o)));
}

CommandResult cmd_oracle_sweep(const Options& o) {
  need(o, 0, "no positional arguments");
  Rng rng(o.seed);
  std::size_t count = o.count.value_or(1000), agree = 0, checked = 0, mismatches = 0;
  for (std::size_t t = 0; t < count; ++t) {
    int n = static_cast<int>(rng.range(1, o.n));
    unsigned e = std::max(1U, o.trunc / 2 - 1);
    Element a = Element::monomial(rng.monomial(n, e / 2 + 1));
    Element b = Element::monomial(rng.monomial(n, e / 2 + 1));
    OracleReport r = shift_oracle_report(TruncatedRep{n, o.trunc}, a, b);
    if (r.ok) ++agree;
    checked += r.checked;
    mismatches += r.mismatches;
  }
  json out = {{"pairs", count}, {"agree", agree}, {"vectors", checked}, {"mismatches", mismatches}, {"D", o.trunc}};
  CommandResult r = ok(out, std::to_string(agree) + "/" + std::to_string(count) + " pairs agree, " +
                                std::to_string(mismatches) + " mismatches over " + std::to_string(checked) + " vectors");
  if (agree != count) {
    r.status = "error";
    r.code = "oracle-mismatch";
  }
  return r;
}

// ---- homology -------------------------------------------------------------

CommandResult complex_result(const TruncatedComplex& c, const std::vector<ExactnessReport>& reports) {
  json rep = json::array();
  std::string text = c.name + " d=" + std::to_string(c.truncation) + " d^2=0: " + (check_d_squared(c) ? "yes" : "no");
  for (const auto& r : reports) {
    const std::string& space = c.space_names[r.position];
    rep.push_back(exactness_json(r, space));
    text += "\n" + space + ": dim " + std::to_string(r.dim) + ", homology " + std::to_string(r.homology_dim) +
            (r.window_caveat ? " (window)" : "");
  }
  return ok({{"name", c.name}, {"truncation", c.truncation}, {"d_squared_zero", check_d_squared(c)}, {"reports", rep}},
            text);
}

CommandResult cmd_resolve_anres(const Options& o) {
  need(o, 0, "no positional arguments");
  TruncatedComplex c = build_anres(o.n, o.trunc);
  return complex_result(c, check_tag_diagonal_exactness(c));
}

CommandResult cmd_resolve_koszul(const Options& o) {
  need(o, 0, "no positional arguments");
  if (!o.lambda) throw UsageError("--lambda is required");
  TruncatedComplex c = build_koszul_Mlambda(o.n, rational_list(*o.lambda), o.trunc);
  return complex_result(c, check_windowed_exactness(c));
}

CommandResult cmd_coker(const Options& o) {
  need(o, 2, "LAMBDA and an element of S_1");
  Options sub = o;
  sub.n = 1;
  CokerResult r = coker_principal_left(rational_arg(o.args[0]), elem(sub, o.args[1]));
  return ok({{"scalar", rational_json(r.scalar)}, {"certificate", elem_json(r.certificate)}},
            "scalar " + sn::to_string(r.scalar) + "\ncertificate " + sn::to_string(r.certificate));
}

CommandResult cmd_finv(const Options& o) {
  need(o, 2, "LAMBDA and an element of F");
  Options sub = o;
  sub.n = 1;
  return ok(elem_json(f_block_inverse(rational_arg(o.args[0]), elem(sub, o.args[1]))));
}

CommandResult cmd_split(const Options& o) {
  need(o, 1, "pn or fn");
  SplitKind k;
  if (o.args[0] == "pn") {
    k = SplitKind::PnSummand;
  } else if (o.args[0] == "fn") {
    k = SplitKind::FnColumn;
  } else {
    throw UsageError("split kind must be pn or fn");
  }
  return ok(check_projective_split(k, o.n, o.trunc));
}

CommandResult cmd_nonsplit(const Options& o) {
  need(o, 0, "no positional arguments");
  return ok(nonsplit_witness_F(o.n, o.trunc));
}

// ---- verification ---------------------------------------------------------

CommandResult cmd_verify(const Options& o) {
  need(o, 1, "a verify tag or 'all'");
  std::vector<std::string> tags;
  if (o.args[0] == "all") {
    for (const auto& c : check_catalog()) tags.push_back(c.tag);
  } else {
    tags.push_back(o.args[0]);
  }
  json out = json::array();
  std::vector<std::string> lines;
  bool passed = true;
  for (const auto& t : tags) {
    CheckResult r = run_check(t, o.seed, o.quick);
    passed = passed && r.passed;
    out.push_back({{"tag", r.tag}, {"passed", r.passed}, {"lines", r.lines}});
    lines.push_back("== " + r.tag + " ==");
    lines.insert(lines.end(), r.lines.begin(), r.lines.end());
  }
  std::string text;
  for (const auto& l : lines) text += (text.empty() ? "" : "\n") + l;
  CommandResult r = ok(out, text);
  if (!passed) {
    r.status = "error";
    r.code = "check-failed";
  }
  return r;
}

}  // namespace

const std::vector<CommandSpec>& command_table() {
  static const std::vector<CommandSpec> t = {
      {"normalize", {"parse_expr", "eval_expr"}, "EXPR", cmd_normalize},
      {"mul", {"multiply"}, "EXPR EXPR...", cmd_mul},
      {"eta", {"involution"}, "EXPR", cmd_eta},
      {"degree", {"filtration_degree"}, "EXPR", cmd_degree},
      {"zgrade", {"zgrade_split"}, "EXPR", cmd_zgrade},
      {"gr", {"gr_symbol"}, "EXPR", cmd_gr},
      {"hilbert", {"hilbert_dim"}, "I", cmd_hilbert},
      {"matunit", {"matrix_unit"}, "FACTOR I J", cmd_matunit},
      {"decompose", {"to_decomposed"}, "EXPR", cmd_decompose},
      {"recompose", {"from_decomposed"}, "JSON", cmd_recompose},
      {"matunit-check", {"matrix_unit_product_check"}, "ALPHA BETA GAMMA RHO (comma lists)", cmd_matunit_check},
      {"pi", {"laurent_projection"}, "EXPR", cmd_pi},
      {"fblock", {"f_block_part"}, "EXPR [--subset 1,2]", cmd_fblock},
      {"slice", {"extract_slice_coefficients"}, "EXPR [--factor I]", cmd_slice},
      {"annihilator", {"left_annihilator_slice"}, "GEN [--trunc D]", cmd_annihilator},
      {"centralizer", {"centralizer_slice"}, "EXPR [--trunc D]", cmd_centralizer},
      {"poly monic", {"uni_normalize_monic"}, "POLY", cmd_poly_monic},
      {"poly factor", {"uni_factor"}, "POLY", cmd_poly_factor},
      {"laurent-eval", {"laurent_eval"}, "LAURENT --point JSON", cmd_laurent_eval},
      {"ideal mul", {"ideal_product"}, "IDEAL IDEAL", cmd_ideal_mul},
      {"ideal sum", {"ideal_sum"}, "IDEAL IDEAL", cmd_ideal_sum},
      {"ideal cap", {"ideal_intersection"}, "IDEAL IDEAL", cmd_ideal_cap},
      {"ideal member", {"ideal_membership"}, "IDEAL EXPR", cmd_ideal_member},
      {"ideal factor", {"s1_factor_into_maximals"}, "IDEAL", cmd_ideal_factor},
      {"spec ht", {"prime_height"}, "PRIME", cmd_spec_ht},
      {"spec contains", {"prime_contains"}, "PRIME PRIME", cmd_spec_contains},
      {"spec relht", {"relative_height"}, "PRIME PRIME", cmd_spec_relht},
      {"spec refine", {"catenary_refine"}, "PRIME... | [PRIME, ...]", cmd_spec_refine},
      {"spec height-one", {"height_one_primes"}, "", cmd_spec_height_one},
      {"spec completely-prime", {"is_completely_prime"}, "PRIME", cmd_spec_completely_prime},
      {"spec maximals", {"maximal_ideal_from_point"}, "--point JSON", cmd_spec_maximals},
      {"lattice enum", {"enumerate_idempotent_ideals"}, "", cmd_lattice_enum},
      {"lattice count", {"count_idempotent_ideals"}, "", cmd_lattice_count},
      {"lattice minprimes", {"min_primes_idempotent"}, "IDEAL", cmd_lattice_minprimes},
      {"noeth-factor", {"is_noetherian_factor"}, "IDEAL", cmd_noeth_factor},
      {"act-poly", {"act_on_poly"}, "EXPR POLY", cmd_act_poly},
      {"act-module", {"act_on_module"}, "EXPR --module JSON [--vector JSON]", cmd_act_module},
      {"witness", {"simplicity_witness", "module_witness"}, "POLY | --module JSON [--vector JSON]", cmd_witness},
      {"module-hilbert", {"module_hilbert"}, "--module JSON [--imax K]", cmd_module_hilbert},
      {"module-inv", {"module_invariants"}, "--module JSON", cmd_module_inv},
      {"module-ann", {"annihilator_of_simple"}, "--module JSON", cmd_module_ann},
      {"oracle sweep", {"shift_oracle_check"}, "[--count K] [--trunc D]", cmd_oracle_sweep},
      {"resolve anres", {"build_anres", "check_tag_diagonal_exactness"}, "[--trunc D]", cmd_resolve_anres},
      {"resolve koszul", {"build_koszul_Mlambda"}, "--lambda L1,L2,... [--trunc D]", cmd_resolve_koszul},
      {"coker", {"coker_principal_left"}, "LAMBDA EXPR", cmd_coker},
      {"finv", {"f_block_inverse"}, "LAMBDA EXPR", cmd_finv},
      {"split", {"check_projective_split"}, "pn|fn [--trunc D]", cmd_split},
      {"nonsplit", {"nonsplit_witness_F"}, "[--trunc D]", cmd_nonsplit},
      {"verify", {}, "TAG|all [--quick]", cmd_verify},
  };
  return t;
}

std::string usage_text() {
  std::string out =
      "usage: sncalc COMMAND [ARGS] [--n N] [--trunc D] [--seed S] [--json] [--flavor s|d]\n"
      "Arguments that start with '-' go after a literal --.\n\ncommands:\n";
  for (const auto& c : command_table()) out += "  " + c.path + (c.usage.empty() ? "" : " " + c.usage) + "\n";
  out += "\nverify tags: all";
  for (const auto& c : check_catalog()) out += " " + c.tag;
  out += "\n";
  return out;
}

namespace {

std::string render_text(const json& payload) {
  if (payload.is_string()) return payload.get<std::string>();
  if (payload.is_array() && std::all_of(payload.begin(), payload.end(), [](const json& j) { return j.is_string(); })) {
    std::string out;
    for (const auto& j : payload) out += (out.empty() ? "" : "\n") + j.get<std::string>();
    return out;
  }
  return payload.dump();
}

std::string envelope(const std::string& path, const CommandResult& r) {
  json j = {{"schema", kSchemaVersion}, {"command", path}, {"status", r.status}, {"payload", r.payload},
            {"diagnostics", r.diagnostics}};
  if (!r.code.empty()) j["code"] = r.code;
  return j.dump(2) + "\n";
}

}  // namespace

Outcome run_command(const std::vector<std::string>& argv) {
  Outcome out;
  Options o;
  std::vector<std::string> positional;
  std::string flavor = "s";
  CLI::App app{"exact arithmetic and structure computations in S_n", "sncalc"};
  app.set_help_flag("-h,--help");
  app.add_option("--n", o.n, "rank")->check(CLI::Range(1, 16));
  app.add_option("--trunc", o.trunc, "truncation degree")->envname("SN_TRUNC");
  app.add_option("--seed", o.seed, "random seed");
  app.add_flag("--json", o.json, "JSON envelope output");
  app.add_option("--flavor", flavor, "s (S_n) or d (graded D_n)")->check(CLI::IsMember({"s", "d"}));
  app.add_flag("--quick", o.quick, "smaller samples for verify");
  app.add_option("--prime", o.primes, "prime descriptor JSON (repeatable)");
  app.add_option("--point", o.point, "point JSON {\"i\": \"v\"}");
  app.add_option("--subset", o.subset, "comma list of factors");
  app.add_option("--lambda", o.lambda, "comma list of rationals");
  app.add_option("--module", o.module, "simple module JSON");
  app.add_option("--vector", o.vector, "module vector JSON");
  app.add_option("--factor", o.factor, "tensor factor");
  app.add_option("--imax", o.imax, "Hilbert range");
  app.add_option("--count", o.count, "sample count");
  app.add_option("args", positional, "command and arguments");

  bool want_json = std::find(argv.begin(), argv.end(), "--json") != argv.end();
  std::string path;
  try {
    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    app.parse(rev);
    o.flavor = flavor == "d" ? Flavor::D : Flavor::S;
    const CommandSpec* spec = nullptr;
    for (const auto& c : command_table()) {
      std::size_t words = static_cast<std::size_t>(std::count(c.path.begin(), c.path.end(), ' ')) + 1;
      if (positional.size() < words) continue;
      std::string head;
      for (std::size_t k = 0; k < words; ++k) head += (k ? " " : "") + positional[k];
      if (head == c.path && (!spec || c.path.size() > spec->path.size())) spec = &c;
    }
    if (!spec) {
      throw UsageError(positional.empty() ? "missing command" : "unknown command '" + positional[0] + "'");
    }
    path = spec->path;
    std::size_t words = static_cast<std::size_t>(std::count(path.begin(), path.end(), ' ')) + 1;
    o.args.assign(positional.begin() + static_cast<long>(words), positional.end());
    out.result = spec->handler(o);
    out.exit_code = out.result.status == "ok" ? 0 : 2;
    if (want_json) {
      out.out = envelope(path, out.result);
    } else {
      out.out = (out.result.text.empty() ? render_text(out.result.payload) : out.result.text) + "\n";
    }
    return out;
  } catch (const CLI::CallForHelp&) {
    out.out = usage_text();
    out.exit_code = 0;
    return out;
  } catch (const CLI::ParseError& e) {
    out.result.status = "error";
    out.result.code = "usage";
    out.result.diagnostics.push_back(e.what());
    out.exit_code = 3;
  } catch (const UsageError& e) {
    out.result.status = "error";
    out.result.code = "usage";
    out.result.diagnostics.push_back(e.what());
    out.exit_code = 3;
  } catch (const DomainError& e) {
    out.result.status = "error";
    out.result.code = e.code();
    out.result.diagnostics.push_back(e.what());
    out.exit_code = 2;
  } catch (const json::exception& e) {
    out.result.status = "error";
    out.result.code = "bad-json";
    out.result.diagnostics.push_back(e.what());
    out.exit_code = 2;
  }
  out.result.payload = nullptr;
  if (want_json) {
    out.out = envelope(path, out.result);
  } else {
    out.err = "error[" + out.result.code + "]: " + out.result.diagnostics.front() + "\n";
    if (out.exit_code == 3) out.err += "run sncalc --help for usage\n";
  }
  return out;
}

}  // namespace sn::cli
