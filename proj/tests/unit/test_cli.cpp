#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "sn/cli/checks.hpp"
#include "sn/cli/commands.hpp"
#include "sn/decomposition.hpp"

using namespace sn;
using namespace sn::cli;
using testing::E;
using testing::error_code;

namespace {

Outcome run(std::vector<std::string> argv) { return run_command(argv); }

}  // namespace

TEST_CASE("parser examples") {
  CHECK(E("y1*x1") == Element::one(1));
  CHECK(E("1 - x1*y1") == matrix_unit(1, 1, 0, 0));
  CHECK_NOTHROW(E("x1^2*y1 - 3/2"));
  CHECK(E("0").is_zero());
  CHECK(E("-(x1 - 2)^2") == E("-x1^2 + 4*x1 - 4"));
  CHECK(E("2*-x1") == E("-2*x1"));
  CHECK(E("x1*y2 - 1/3*(x2 + y1)^2", 2) == E("x1*y2 - 1/3*x2^2 - 2/3*x2*y1 - 1/3*y1^2", 2));
}

TEST_CASE("parser errors") {
  CHECK(error_code([] { E("x1 y1"); }) == "syntax-error");
  CHECK(error_code([] { E("x1 +"); }) == "syntax-error");
  CHECK(error_code([] { E("(x1"); }) == "syntax-error");
  CHECK(error_code([] { E("x0"); }) == "index-out-of-range");
  CHECK(error_code([] { E("x3", 2); }) == "index-out-of-range");
  CHECK(error_code([] { E("x1^257"); }) == "syntax-error");
  try {
    E("1 +\n  * x1");
    FAIL("no error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("parser round trip over a corpus") {
  const std::vector<std::pair<std::string, int>> corpus = {
      {"0", 1},
      {"1", 1},
      {"-7/3", 2},
      {"x1^3*y1^2 - 2*x1 + 1/2", 1},
      {"(1 - x1*y1)*(1 - x2*y2)", 2},
      {"y1^4*x1^2*y2*x3", 3},
      {"(x1 + y2)^3 - x1*x2*x3", 3},
      {"-(y3 - 5)*x2^2", 3},
  };
  for (const auto& [src, n] : corpus) {
    for (Flavor f : {Flavor::S, Flavor::D}) {
      Element a = E(src, n, f);
      CHECK(E(to_string(a), n, f) == a);
      CHECK(to_string(E(to_string(a), n, f)) == to_string(a));
    }
  }
}

TEST_CASE("dispatch table covers each operation once") {
  const std::vector<std::string> required = {
      "uni_normalize_monic", "uni_factor", "laurent_eval", "multiply", "involution", "filtration_degree",
      "hilbert_dim", "zgrade_split", "gr_symbol", "matrix_unit", "to_decomposed", "from_decomposed",
      "matrix_unit_product_check", "laurent_projection", "f_block_part", "extract_slice_coefficients",
      "left_annihilator_slice", "centralizer_slice", "ideal_membership", "ideal_product", "ideal_sum",
      "ideal_intersection", "s1_factor_into_maximals", "height_one_primes", "prime_contains", "prime_height",
      "relative_height", "catenary_refine", "enumerate_idempotent_ideals", "min_primes_idempotent",
      "is_noetherian_factor", "is_completely_prime", "maximal_ideal_from_point", "act_on_poly",
      "simplicity_witness", "act_on_module", "module_hilbert", "module_invariants", "shift_oracle_check",
      "annihilator_of_simple", "build_anres", "check_tag_diagonal_exactness", "build_koszul_Mlambda",
      "f_block_inverse", "coker_principal_left", "check_projective_split", "nonsplit_witness_F", "parse_expr",
      "eval_expr"};
  std::map<std::string, int> seen;
  for (const auto& spec : command_table()) {
    CHECK(spec.handler != nullptr);
    for (const auto& op : spec.ops) ++seen[op];
  }
  for (const auto& op : required) {
    INFO(op);
    CHECK(seen[op] == 1);
  }
  for (const auto& [op, count] : seen) {
    INFO(op);
    CHECK(count == 1);
  }
}

TEST_CASE("command examples and exit codes") {
  Outcome mul = run({"mul", "--n", "1", "y1", "x1"});
  CHECK(mul.exit_code == 0);
  CHECK(mul.out == "1\n");
  CHECK(run({"lattice", "count", "--n", "3"}).out == "20\n");
  Outcome norm = run({"normalize", "y1^2*x1^3"});
  CHECK(norm.out == "1*x1^1\n");

  Outcome bad = run({"mul", "x1 y1", "x1"});
  CHECK(bad.exit_code == 2);
  Outcome usage = run({"no-such-command"});
  CHECK(usage.exit_code == 3);
  CHECK(usage.err.find("error[usage]") != std::string::npos);
  CHECK(run({"mul", "--n", "0", "x1", "x1"}).exit_code == 3);
  CHECK(run({"ideal", "member"}).exit_code == 3);
}

TEST_CASE("json envelope") {
  Outcome o = run({"spec", "ht", "--n", "2", "--json", "--prime", R"({"N":[],"q":{"kind":"zero"}})"});
  REQUIRE(o.exit_code == 0);
  auto j = nlohmann::json::parse(o.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "spec ht");
  CHECK(j["status"] == "ok");
  CHECK(j["payload"]["ht"] == 2);
  CHECK(j["payload"]["cht"] == 2);
  CHECK(j["diagnostics"].is_array());

  Outcome err = run({"normalize", "--json", "x1 +"});
  CHECK(err.exit_code == 2);
  auto je = nlohmann::json::parse(err.out);
  CHECK(je["status"] == "error");
  CHECK(je["code"] == "syntax-error");
}

TEST_CASE("verify output is deterministic") {
  for (const auto& info : check_catalog()) {
    CheckResult a = run_check(info.tag, 7, true);
    CheckResult b = run_check(info.tag, 7, true);
    CHECK(a.lines == b.lines);
    CHECK(a.passed);
  }
  CHECK(error_code([] { run_check("nope", 1, true); }) == "unknown-tag");
}
