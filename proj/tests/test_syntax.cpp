#include "doctest.h"
#include "loopw/env.hpp"
#include "loopw/parser.hpp"
#include "support.hpp"

using namespace loopw;
using namespace loopw::testing;

TEST_CASE("substitution on terms") {
  const Term t = parse_term("x + s(y)");
  CHECK(to_string(subst_term(t, "x", parse_term("3"))) == "(3 + s(y))");
  CHECK(subst_term(t, "z", parse_term("3")) == t);
  // Simultaneous, not sequential.
  const Substitution swap{{"x", Term::var("y")}, {"y", Term::var("x")}};
  CHECK(to_string(subst_term(t, swap)) == "(y + s(x))");
}

TEST_CASE("substitution avoids capture under procedure binders") {
  const Formula f = parse_formula("proc({y} in nat(y); out nat(x + y))");
  const Formula g = subst_formula(f, "x", Term::var("y"));
  CHECK(free_term_vars(g).count(Ident("y")) == 1);
  CHECK(alpha_equal(g, parse_formula("proc({w} in nat(w); out nat(y + w))")));
  CHECK_FALSE(g == parse_formula("proc({y} in nat(y); out nat(y + y))"));
}

TEST_CASE("alpha equality renames procedure binders only") {
  CHECK(alpha_equal(parse_formula("proc({x} in nat(x); out nat(x))"),
                    parse_formula("proc({z} in nat(z); out nat(z))")));
  CHECK_FALSE(alpha_equal(parse_formula("nat(x)"), parse_formula("nat(z)")));
  CHECK_FALSE(parse_formula("proc({x} in nat(x); out nat(x))") ==
              parse_formula("proc({z} in nat(z); out nat(z))"));
}

TEST_CASE("env split") {
  const Env e{{"X", parse_formula("nat(x)")}, {"Y", parse_formula("nat(y)")},
              {"Z", parse_formula("$")}};
  auto parts = e.split({"Z", "X"});
  REQUIRE(parts);
  CHECK(parts->first.keys() == std::vector<Ident>{"X", "Z"});
  CHECK(parts->second.keys() == std::vector<Ident>{"Y"});
  CHECK_FALSE(e.split({"X", "X"}));
  CHECK_FALSE(e.split({"Q"}));
}

TEST_CASE("property: substitution identities") {
  const auto r = prop_substitution(11, 3000);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: env split permutation law") {
  const auto r = prop_env_split(12, 3000);
  INFO(r.first_failure);
  CHECK(r.ok());
}
