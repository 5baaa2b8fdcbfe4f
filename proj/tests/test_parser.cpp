#include "doctest.h"
#include "loopw/lexer.hpp"
#include "loopw/parser.hpp"
#include "loopw/printer.hpp"
#include "support.hpp"

using namespace loopw;
using namespace loopw::testing;

TEST_CASE("terms and formulas print back in canonical form") {
  CHECK(to_string(parse_term("x + y * 2")) == "(x + (y * 2))");
  CHECK(to_string(parse_term("s(s(0))")) == "2");
  CHECK(to_string(parse_formula("~~F")) == "~~F");
  CHECK(to_string(parse_formula("proc({x} in nat(x); out nat(s(x)))")) ==
        "proc({x} in nat(x); out nat(s(x)))");
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_program("var X := ;\n", "bad.loop");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.region.file == "bad.loop");
    CHECK(e.region.line == 1);
  }
  CHECK_THROWS_AS(parse_proof("var X := *;\nwith {}\n", "bad.proof"), ParseError);
  CHECK_THROWS_AS(parse_term("s("), ParseError);
}

TEST_CASE("erased printing drops every annotation") {
  const InferResult r = infer_corpus("add");
  const std::string cs = print_erased(r.proof);
  CHECK(cs.find("nat") == std::string::npos);
  CHECK(cs.find("inc(Z);") != std::string::npos);
  CHECK(cs.find("p_add(3, 5; N);") != std::string::npos);
}

TEST_CASE("property: parse/print roundtrip on corpus and random proofs") {
  const auto r = prop_roundtrip(15, 500);
  INFO(r.first_failure);
  CHECK(r.ok());
}
