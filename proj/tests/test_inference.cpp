#include "doctest.h"
#include "loopw/inference.hpp"
#include "loopw/parser.hpp"
#include "loopw/printer.hpp"
#include "support.hpp"

using namespace loopw;
using namespace loopw::testing;

TEST_CASE("addition obligation table") {
  const InferResult r = infer_corpus("add");
  REQUIRE(r.obligations.size() == 2);
  CHECK(print_obligation(r.obligations[0]) == "1: |- (x = (x + 0))");
  CHECK(print_obligation(r.obligations[1]) == "2: |- (s((x + i)) = (x + s(i)))");
}

TEST_CASE("addition derivation view") {
  const InferResult r = infer_corpus("add");
  const std::string typ = print_typ_view(r.proof, r.obligations);
  CHECK(typ.find("[N:nat((3 + 5))]") != std::string::npos);
  CHECK(typ.find("-(i:nat(i))[Z:nat((x + i))]") != std::string::npos);
  CHECK(typ.find("[Z:nat((x + y))]    by #2") != std::string::npos);
  CHECK(typ.find("1: |- (x = (x + 0))") != std::string::npos);
  const std::string form = print_typ_view(r.proof, r.obligations, {}, true);
  CHECK(form.find("Forall x,y.((nat(x) & nat(y)) => nat((x + y)))") != std::string::npos);
}

TEST_CASE("Ackermann loop exit shows the generalised procedure") {
  const InferResult r = infer_corpus("ack");
  CHECK(r.obligations.size() == 3);
  const std::string typ = print_typ_view(r.proof, r.obligations);
  CHECK(typ.find("G:proc({y} in nat(y); out nat(a(i,y)))") != std::string::npos);
}

TEST_CASE("inference failures are diagnostics") {
  const SeqP src = parse_program("var X := 1;\ninc(Y);\n", "bad.loop");
  try {
    infer_program(src);
    FAIL("expected an inference error");
  } catch (const InferError& e) {
    CHECK_FALSE(e.diag.rule.empty());
    CHECK(e.diag.region.line == 2);
  }
}

TEST_CASE("witness solving and reconciliation") {
  const auto w = solve_witness({"x", "y"}, {parse_formula("nat(x)"), parse_formula("nat(y)")},
                               {parse_formula("nat(3)"), parse_formula("nat(5)")});
  REQUIRE(w);
  CHECK(to_string(*w) == "{x := 3, y := 5}");
  CHECK_FALSE(solve_witness({"x"}, {parse_formula("nat(x)"), parse_formula("nat(x)")},
                            {parse_formula("nat(3)"), parse_formula("nat(5)")}));
  const auto d = reconcile(parse_formula("nat(x)"), parse_formula("nat(x + 0)"));
  REQUIRE(d);
  REQUIRE(d->size() == 1);
  CHECK(to_string((*d)[0].want) == "(x + 0)");
  CHECK_FALSE(reconcile(parse_formula("nat(x)"), parse_formula("$")));
}
