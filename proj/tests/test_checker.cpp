#include <sstream>

#include "doctest.h"
#include "loopw/checker.hpp"
#include "loopw/parser.hpp"
#include "support.hpp"

using namespace loopw;
using namespace loopw::testing;

TEST_CASE("inferred corpus proofs check") {
  for (const auto& name : kCorpus) {
    CAPTURE(name);
    CHECK(check_outcome(corpus_proof(name)) == "ok");
  }
}

TEST_CASE("each rule rejects its mutation") {
  for (const auto& m : mutations()) {
    CAPTURE(m.rule);
    CHECK(check_outcome(mutate(m, corpus_proof(m.program))) == m.rule);
  }
}

TEST_CASE("freshness side conditions") {
  for (const auto& c : freshness_cases()) {
    CAPTURE(c.condition);
    CHECK(check_outcome(c.violating) == c.rule);
    CHECK(check_outcome(c.control) == "ok");
  }
}

TEST_CASE("diagnostics name the rule and the enclosing rules") {
  const auto& m = mutations().front();
  const ProofFile pf = parse_proof(mutate(m, corpus_proof(m.program)), "add.proof");
  const CheckResult r = check_program(pf.body);
  REQUIRE_FALSE(r.ok);
  const std::string text = format_diagnostic(r.diagnostics.front());
  CHECK(text.rfind("add.proof:", 0) == 0);
  CHECK(text.find(": T.EMPTY: ") != std::string::npos);
  CHECK(text.find("while checking:") != std::string::npos);
}

TEST_CASE("collect-all mode keeps checking sibling declarations") {
  const std::string bad = R"(var X : nat(0) := (1 : nat(0));
var Y : nat(0) := (2 : nat(0));
with {}
)";
  CheckOptions opt;
  opt.collect_all = true;
  const CheckResult r = check_program(parse_proof(bad, "two.proof").body, {}, opt);
  CHECK_FALSE(r.ok);
  CHECK(r.diagnostics.front().rule == "T.NUM");
}

TEST_CASE("trace output at verbosity 2 and 3") {
  std::ostringstream out;
  CheckOptions opt;
  opt.verbosity = 3;
  opt.trace = &out;
  CHECK(check_program(parse_proof(corpus_proof("add"), "add.proof").body, {}, opt).ok);
  CHECK(out.str().find("T.FOR") != std::string::npos);
  CHECK(out.str().find("  G = ") != std::string::npos);
}
