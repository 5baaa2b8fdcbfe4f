#include "doctest.h"
#include "loopw/obligations.hpp"
#include "loopw/parser.hpp"
#include "support.hpp"

using namespace loopw;
using namespace loopw::testing;

namespace {

std::string norm(const char* t) { return to_string(normalize(parse_term(t))); }

Obligation ob(const char* l, const char* r) { return Obligation{1, parse_term(l), parse_term(r)}; }

}  // namespace

TEST_CASE("normal forms") {
  CHECK(norm("x + 0") == "x");
  CHECK(norm("2 + 3") == "5");
  CHECK(norm("s(x) - 1") == "x");
  CHECK(norm("0 - x") == "0");
  CHECK(norm("p(0)") == "0");
  CHECK(norm("p(s(x))") == "x");
  CHECK(norm("x * 0") == "0");
  CHECK(normalize(parse_term("y + x")) == normalize(parse_term("x + y")));
  CHECK(normalize(parse_term("x * s(y)")) == normalize(parse_term("x * y + x")));
  CHECK(normalize(parse_term("a(x + 0, y)")) == normalize(parse_term("a(x, y)")));
}

TEST_CASE("discharge") {
  CHECK(discharge(ob("x", "x + 0")) == Discharge::Proven);
  CHECK(discharge(ob("s(x + i)", "x + s(i)")) == Discharge::Proven);
  CHECK(discharge(ob("s(y)", "a(0,y)")) == Discharge::Unknown);
  CHECK(discharge(ob("x", "y")) == Discharge::Unknown);
  CHECK(discharge(ob("x - y + y", "x")) == Discharge::Unknown);
}

TEST_CASE("add obligations are proven, ack's are not") {
  CHECK(discharge_report(infer_corpus("add").obligations) ==
        std::vector<std::string>{"1: proven", "2: proven"});
  for (const auto& line : discharge_report(infer_corpus("ack").obligations))
    CHECK(line.find("unknown") != std::string::npos);
}

TEST_CASE("ground evaluation") {
  CHECK(eval_ground(parse_term("3 - 5")) == 0u);
  CHECK(eval_ground(parse_term("p(0)")) == 0u);
  CHECK(eval_ground(parse_term("x * (y + 1)"), {{"x", 4}, {"y", 2}}) == 12u);
  CHECK_FALSE(eval_ground(parse_term("x + 1")));
  CHECK_FALSE(eval_ground(parse_term("a(1,1)")));
}

TEST_CASE("SMT-LIB export") {
  const std::string s = export_smtlib(infer_corpus("add").obligations);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
  };
  CHECK(count("(check-sat)") == 2);
  CHECK(count("(push 1)") == 2);
  CHECK(count("(pop 1)") == 2);
  CHECK(s.find("(set-logic UFNIA)") != std::string::npos);
  CHECK(s.find("(assert (! (not (= v_x (+ v_x 0))) :named ob1))") != std::string::npos);
}

TEST_CASE("property: normalize is idempotent") {
  const auto r = prop_normalize_idempotent(13, 10000);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: proven obligations hold under random assignments") {
  const auto r = prop_proven_sound(14, 1000);
  INFO(r.first_failure);
  CHECK(r.ok());
}
