#include "loopw/checker.hpp"
#include "loopw/functional.hpp"

#include <algorithm>
#include <ostream>

namespace loopw {

std::string format_diagnostic(const Diagnostic& d, bool formula_view) {
  auto show = [&](const Formula& f) {
    return formula_view ? to_string(translate_formula(f)) : to_string(f);
  };
  std::string r = where(d.region) + ": " + d.rule + ": " + d.message;
  if (d.expected) r += "\n  expected: " + show(*d.expected);
  if (d.actual) r += "\n  actual:   " + show(*d.actual);
  if (!d.enclosing.empty()) {
    r += "\n  while checking:";
    for (const auto& e : d.enclosing) r += " " + e;
  }
  return r;
}

Formula label_type(const OutSpec& spec) {
  return Formula::proc(ProcType{spec.exists, spec.vars.image(), {}, {Formula::bot()}});
}

namespace {

bool contains(const std::vector<Ident>& v, const Ident& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::string env_str(const Env& e) {
  std::string r = "[";
  bool first = true;
  for (const auto& [k, f] : e) {
    if (!first) r += ", ";
    first = false;
    r += k.str() + ":" + to_string(f);
  }
  return r + "]";
}

class Checker {
public:
  explicit Checker(const CheckOptions& o) : opt_(o) {}

  std::vector<Diagnostic> diags;

  bool seq(const Env& gamma, const Env& omega, const OutSpec& spec, const SeqP& sp) {
    const Sequence& s = *sp;
    const std::size_t mark = diags.size();
    const Region& reg = s.kind == Sequence::Kind::Seq ? s.cmd->region : s.region;
    switch (s.kind) {
      case Sequence::Kind::Empty: {
        trace("T.EMPTY", reg, gamma, omega);
        if (!s.witness) return fail("T.EMPTY", "sequence end has no witness", reg, mark);
        const auto keys = subst_keys(*s.witness);
        if (keys != spec.exists)
          return fail("T.EMPTY",
                      "witness instantiates {" + join_idents(keys) + "} but the out type binds {" +
                          join_idents(spec.exists) + "}",
                      reg, mark);
        const Env want = subst_env(spec.vars, *s.witness);
        const Env have = omega.restricted_to(spec.vars.keys());
        if (!want.same_bindings(have))
          return fail("T.EMPTY",
                      "final environment " + env_str(have) + " does not match out type " +
                          env_str(want),
                      reg, mark);
        return true;
      }

      case Sequence::Kind::Cst:
      case Sequence::Kind::Var: {
        const bool cst = s.kind == Sequence::Kind::Cst;
        const char* rule = cst ? "T.CST" : "T.VAR";
        trace(rule, reg, gamma, omega);
        if (!s.type) return fail(rule, "declaration has no type", reg, mark);
        bool ok = exp(gamma, omega, *s.type, s.value);
        if (!ok) fail_exp(rule, "value of " + s.name.str(), *s.type, s.value, reg, mark);
        if (!ok && !opt_.collect_all) return false;
        const std::size_t tail_mark = diags.size();
        bool tail = cst ? seq(gamma.updated(s.name, *s.type), omega, spec, s.next)
                        : seq(gamma, omega.updated(s.name, *s.type), spec, s.next);
        if (!tail) fail(rule, "", reg, tail_mark);
        return ok && tail;
      }

      case Sequence::Kind::Subst: {
        trace("T.SUBST-II", reg, gamma, omega);
        const auto& j = s.justification;
        if (!j->type) return fail("T.SUBST-II", "justification has no type", reg, mark);
        if (!exp(gamma, omega, *j->type, j))
          return fail_exp("T.SUBST-II", "justification", *j->type, j, reg, mark);
        if (j->type->kind() != Formula::Kind::Equal)
          return fail("T.SUBST-II", "justification must prove an equality", reg, mark,
                      std::nullopt, *j->type);
        const Term& n = j->type->terms()[0];
        const Term& m = j->type->terms()[1];
        const Env after = subst_env(s.context, {{s.hole, m}});
        if (!after.same_bindings(spec.vars))
          return fail("T.SUBST-II",
                      "context " + env_str(after) + " does not match out type " +
                          env_str(spec.vars),
                      reg, mark);
        OutSpec inner{spec.exists, subst_env(s.context, {{s.hole, n}})};
        if (!seq(gamma, omega, inner, s.next)) return fail("T.SUBST-II", "", reg, mark);
        return true;
      }

      case Sequence::Kind::Seq:
        return command(gamma, omega, spec, *s.cmd, s.next);
    }
    return false;
  }

  bool exp(const Env& gamma, const Env& omega, const Formula& expected, const ExprP& ep) {
    const Expr& e = *ep;
    const std::size_t mark = diags.size();
    if (!e.type || !(*e.type == expected)) return false;  // reported by the caller
    switch (e.kind) {
      case Expr::Kind::Id: {
        const Formula* f = gamma.concat(omega).find(e.id);
        if (!f) return fail("T.ENV", "unbound identifier " + e.id.str(), e.region, mark);
        if (!(*f == expected))
          return fail("T.ENV", e.id.str() + " has a different type in the environment",
                      e.region, mark, expected, *f);
        return true;
      }
      case Expr::Kind::Num: {
        if (expected.kind() == Formula::Kind::Nat && expected.terms()[0].as_numeral() == e.num)
          return true;
        return fail("T.NUM", std::to_string(e.num) + " is not a proof of this type", e.region,
                    mark, expected);
      }
      case Expr::Kind::Star:
        if (expected.kind() == Formula::Kind::Equal) return true;
        return fail("T.STAR", "* only proves equalities", e.region, mark, expected);
      case Expr::Kind::Proc:
        return proc(gamma, expected, e, mark);
      case Expr::Kind::Cast:
        return fail("T.SUBST-I", "coercion without justification", e.region, mark);
      case Expr::Kind::Coerce: {
        const auto& j = e.justification;
        if (!j->type) return fail("T.SUBST-I", "justification has no type", e.region, mark);
        if (!exp(gamma, omega, *j->type, j))
          return fail_exp("T.SUBST-I", "justification", *j->type, j, e.region, mark);
        if (j->type->kind() != Formula::Kind::Equal || !e.target)
          return fail("T.SUBST-I", "justification must prove an equality", e.region, mark,
                      std::nullopt, *j->type);
        const Term& n = j->type->terms()[0];
        const Term& m = j->type->terms()[1];
        const Formula want = subst_formula(*e.target, e.hole, m);
        if (!(want == expected))
          return fail("T.SUBST-I", "rewritten type does not match", e.region, mark, expected,
                      want);
        const Formula before = subst_formula(*e.target, e.hole, n);
        if (!exp(gamma, omega, before, e.inner))
          return fail_exp("T.SUBST-I", "coerced expression", before, e.inner, e.region, mark);
        return true;
      }
      case Expr::Kind::Lemma: {
        if (!e.target || !(*e.target == expected))
          return fail("Lemma", "conclusion does not match", e.region, mark, expected,
                      e.target ? std::optional<Formula>(*e.target) : std::nullopt);
        const auto hyp = gamma.concat(omega).image();
        for (const auto& h : e.hyps)
          if (std::find(hyp.begin(), hyp.end(), h) == hyp.end())
            return fail("Lemma", "hypothesis " + to_string(h) + " is not in scope", e.region,
                        mark);
        return true;
      }
    }
    return false;
  }

private:
  const CheckOptions& opt_;

  void trace(const char* rule, const Region& reg, const Env& gamma, const Env& omega) {
    if (!opt_.trace || opt_.verbosity < 2) return;
    *opt_.trace << where(reg) << ": " << rule << "\n";
    if (opt_.verbosity >= 3)
      *opt_.trace << "  G = " << env_str(gamma) << "\n  W = " << env_str(omega) << "\n";
  }

  bool fail(const std::string& rule, const std::string& msg, const Region& reg,
            std::size_t mark, std::optional<Formula> expected = std::nullopt,
            std::optional<Formula> actual = std::nullopt) {
    if (diags.size() > mark) {
      diags.back().enclosing.push_back(rule);
    } else {
      diags.push_back(Diagnostic{rule, msg.empty() ? "premise failed" : msg, reg,
                                 std::move(expected), std::move(actual), {}});
    }
    return false;
  }

  // A failed exp() with nothing reported means the annotation did not match.
  bool fail_exp(const std::string& rule, const std::string& what, const Formula& expected,
                const ExprP& e, const Region& reg, std::size_t mark) {
    if (diags.size() > mark) return fail(rule, "", reg, mark);
    return fail(rule, what + " is annotated with the wrong type", e->region, mark, expected,
                e->type);
  }

  bool fresh_existentials(const std::vector<Ident>& ks, const Env& gamma, const Env& omega,
                          const OutSpec& spec, const char* rule, const Region& reg,
                          std::size_t mark) {
    IdentSet bad = free_term_vars(gamma);
    const IdentSet w = free_term_vars(omega);
    bad.insert(w.begin(), w.end());
    const IdentSet out = free_term_vars(spec.vars);
    for (const auto& k : ks) {
      if (bad.count(k))
        return fail(rule, "existential " + k.str() + " is not fresh for the environment", reg,
                    mark);
      if (!contains(spec.exists, k) && out.count(k))
        return fail(rule, "existential " + k.str() + " escapes into the out type", reg, mark);
    }
    return true;
  }

  bool proc(const Env& gamma, const Formula& expected, const Expr& e, std::size_t mark) {
    trace("T.PROC", e.region, gamma, Env{});
    const Formula self = Formula::proc(
        ProcType{e.in_vars, e.params.image(), e.out_vars, e.rets.image()});
    if (!(self == expected))
      return fail("T.PROC", "procedure does not have the expected prototype", e.region, mark,
                  expected, self);
    const IdentSet g = free_term_vars(gamma);
    for (const auto& i : e.in_vars)
      if (g.count(i))
        return fail("T.PROC", "in variable " + i.str() + " is free in the constant environment",
                    e.region, mark);
    const Env omega = e.rets.map([](const Formula&) { return Formula::top(); });
    if (!seq(gamma.concat(e.params), omega, OutSpec{e.out_vars, e.rets}, e.body))
      return fail("T.PROC", "", e.region, mark);
    return true;
  }

  // Arguments against the instantiated formal types, modulo alpha.
  bool args_match(const std::vector<Formula>& formals, const std::vector<ExprP>& args,
                  const char* rule, const Region& reg, std::size_t mark) {
    if (formals.size() != args.size())
      return fail(rule,
                  "expected " + std::to_string(formals.size()) + " arguments, got " +
                      std::to_string(args.size()),
                  reg, mark);
    for (std::size_t k = 0; k < args.size(); ++k)
      if (!alpha_equal(formals[k], *args[k]->type))
        return fail(rule, "argument " + std::to_string(k + 1) + " has the wrong type",
                    args[k]->region, mark, formals[k], *args[k]->type);
    return true;
  }

  bool check_args(const Env& gamma, const Env& omega, const std::vector<ExprP>& args,
                  const char* rule, const Region& reg, std::size_t mark) {
    for (const auto& a : args) {
      if (!a->type) return fail(rule, "argument has no type", a->region, mark);
      if (!exp(gamma, omega, *a->type, a))
        return fail_exp(rule, "argument", *a->type, a, reg, mark);
    }
    return true;
  }

  bool command(const Env& gamma, const Env& omega, const OutSpec& spec, const Command& c,
               const SeqP& next) {
    const std::size_t mark = diags.size();
    const Region& reg = c.region;
    switch (c.kind) {
      case Command::Kind::Block: {
        trace("T.BLOCK", reg, gamma, omega);
        const OutSpec& a = *c.spec;
        auto parts = omega.split(a.vars.keys());
        if (!parts)
          return fail("T.BLOCK", "block annotation names a variable that is not in scope", reg,
                      mark);
        if (!seq(gamma, parts->first, a, c.body)) return fail("T.BLOCK", "", reg, mark);
        if (!fresh_existentials(a.exists, gamma, omega, spec, "T.BLOCK", reg, mark))
          return false;
        if (!seq(gamma, parts->second.concat(a.vars), spec, next))
          return fail("T.BLOCK", "", reg, mark);
        return true;
      }

      case Command::Kind::Inc:
      case Command::Kind::Dec: {
        const bool inc = c.kind == Command::Kind::Inc;
        const char* rule = inc ? "T.INC" : "T.DEC";
        trace(rule, reg, gamma, omega);
        const Formula* cur = omega.find(c.name);
        if (!cur || cur->kind() != Formula::Kind::Nat)
          return fail(rule, c.name.str() + " is not a natural-number variable", reg, mark,
                      std::nullopt, cur ? std::optional<Formula>(*cur) : std::nullopt);
        if (!c.type || !(*c.type == *cur))
          return fail(rule, "annotation does not match the current type of " + c.name.str(),
                      reg, mark, *cur, c.type);
        const Term& t = cur->terms()[0];
        const Formula after = Formula::nat(inc ? Term::succ(t) : Term::pred(t));
        if (!seq(gamma, omega.updated(c.name, after), spec, next))
          return fail(rule, "", reg, mark);
        return true;
      }

      case Command::Kind::Assign: {
        trace("T.ASSIGN", reg, gamma, omega);
        if (!omega.contains(c.name))
          return fail("T.ASSIGN", c.name.str() + " is not a variable in scope", reg, mark);
        if (!c.type) return fail("T.ASSIGN", "assignment has no type", reg, mark);
        if (!exp(gamma, omega, *c.type, c.expr))
          return fail_exp("T.ASSIGN", "assigned value", *c.type, c.expr, reg, mark);
        if (!seq(gamma, omega.updated(c.name, *c.type), spec, next))
          return fail("T.ASSIGN", "", reg, mark);
        return true;
      }

      case Command::Kind::For: {
        trace("T.FOR", reg, gamma, omega);
        const OutSpec& a = *c.spec;
        const Ident lid = c.logical.value_or(c.name);
        const auto& bt = c.expr->type;
        if (!bt || bt->kind() != Formula::Kind::Nat)
          return fail("T.FOR", "loop bound must be a natural number", reg, mark, std::nullopt, bt);
        const Term& n = bt->terms()[0];
        auto parts = omega.split(a.vars.keys());
        if (!parts)
          return fail("T.FOR", "loop annotation names a variable that is not in scope", reg,
                      mark);
        const Env sigma0 = subst_env(a.vars, {{lid, Term::zero()}});
        if (!parts->first.same_bindings(sigma0))
          return fail("T.FOR",
                      "environment at loop entry " + env_str(parts->first) +
                          " is not the invariant at 0 " + env_str(sigma0),
                      reg, mark);
        if (!exp(gamma, omega, *bt, c.expr))
          return fail_exp("T.FOR", "loop bound", *bt, c.expr, reg, mark);
        if (!a.exists.empty())
          return fail("T.FOR", "loop annotations cannot bind existential variables", reg, mark);
        if (free_term_vars(gamma).count(lid))
          return fail("T.FOR", "loop index " + lid.str() + " is free in the constant environment",
                      reg, mark);
        const OutSpec step{{}, subst_env(a.vars, {{lid, Term::succ(Term::var(lid))}})};
        if (!seq(gamma.updated(c.name, Formula::nat(Term::var(lid))), a.vars, step, c.body))
          return fail("T.FOR", "", reg, mark);
        if (!seq(gamma, parts->second.concat(subst_env(a.vars, {{lid, n}})), spec, next))
          return fail("T.FOR", "", reg, mark);
        return true;
      }

      case Command::Kind::Call: {
        trace("T.CALL", reg, gamma, omega);
        const auto& ct = c.expr->type;
        if (!ct) return fail("T.CALL", "callee has no type", reg, mark);
        if (!exp(gamma, omega, *ct, c.expr))
          return fail_exp("T.CALL", "callee", *ct, c.expr, reg, mark);
        if (!check_args(gamma, omega, c.args, "T.CALL", reg, mark)) return false;
        if (ct->kind() != Formula::Kind::Proc)
          return fail("T.CALL", "callee is not a procedure", reg, mark, std::nullopt, *ct);
        const ProcType& p = ct->proc();
        if (!c.out_types || c.out_types->size() != c.outs.size())
          return fail("T.CALL", "call outputs are not annotated", reg, mark);
        auto parts = omega.split(c.outs);
        if (!parts)
          return fail("T.CALL", "call output is not a distinct variable in scope", reg, mark);
        if (!c.witness || subst_keys(*c.witness) != p.in_vars)
          return fail("T.CALL", "witness must instantiate {" + join_idents(p.in_vars) + "}",
                      reg, mark);
        const Substitution& w = *c.witness;
        if (!args_match(subst_formulas(p.in_types, w), c.args, "T.CALL", reg, mark))
          return false;
        if (p.out_types.size() != c.outs.size())
          return fail("T.CALL",
                      "expected " + std::to_string(p.out_types.size()) + " outputs, got " +
                          std::to_string(c.outs.size()),
                      reg, mark);
        Env outs;
        for (std::size_t k = 0; k < c.outs.size(); ++k) {
          const Formula want = subst_formula_multi(p.out_types[k], w);
          if (!(want == (*c.out_types)[k]))
            return fail("T.CALL", "output " + c.outs[k].str() + " has the wrong type", reg, mark,
                        want, (*c.out_types)[k]);
          outs = outs.updated(c.outs[k], (*c.out_types)[k]);
        }
        if (!fresh_existentials(p.out_vars, gamma, omega, spec, "T.CALL", reg, mark))
          return false;
        if (!seq(gamma, parts->second.concat(outs), spec, next))
          return fail("T.CALL", "", reg, mark);
        return true;
      }

      case Command::Kind::Label: {
        trace("T.LABEL", reg, gamma, omega);
        const OutSpec& a = *c.spec;
        auto parts = omega.split(a.vars.keys());
        if (!parts)
          return fail("T.LABEL", "label annotation names a variable that is not in scope", reg,
                      mark);
        if (!seq(gamma.updated(c.name, label_type(a)), parts->first, a, c.body))
          return fail("T.LABEL", "", reg, mark);
        if (!seq(gamma, parts->second.concat(a.vars), spec, next))
          return fail("T.LABEL", "", reg, mark);
        return true;
      }

      case Command::Kind::Jump: {
        trace("T.JUMP", reg, gamma, omega);
        const auto& tt = c.expr->type;
        if (!tt) return fail("T.JUMP", "jump target has no type", reg, mark);
        if (!exp(gamma, omega, *tt, c.expr))
          return fail_exp("T.JUMP", "jump target", *tt, c.expr, reg, mark);
        if (!check_args(gamma, omega, c.args, "T.JUMP", reg, mark)) return false;
        if (tt->kind() != Formula::Kind::Proc || !tt->proc().out_vars.empty() ||
            tt->proc().out_types.size() != 1 ||
            tt->proc().out_types[0].kind() != Formula::Kind::Bot)
          return fail("T.JUMP", "jump target is not a continuation", reg, mark, std::nullopt, *tt);
        const ProcType& p = tt->proc();
        const OutSpec& a = *c.spec;
        auto parts = omega.split(a.vars.keys());
        if (!parts)
          return fail("T.JUMP", "jump annotation names a variable that is not in scope", reg,
                      mark);
        if (!c.witness || subst_keys(*c.witness) != p.in_vars)
          return fail("T.JUMP", "witness must instantiate {" + join_idents(p.in_vars) + "}",
                      reg, mark);
        if (!args_match(subst_formulas(p.in_types, *c.witness), c.args, "T.JUMP", reg, mark))
          return false;
        if (!seq(gamma, parts->second.concat(a.vars), spec, next))
          return fail("T.JUMP", "", reg, mark);
        return true;
      }
    }
    return false;
  }
};

}  // namespace

CheckResult check_sequence(const Env& gamma, const Env& omega, const OutSpec& spec,
                           const SeqP& s, const CheckOptions& opt) {
  Checker ck(opt);
  CheckResult r;
  r.ok = ck.seq(gamma, omega, spec, s) && ck.diags.empty();
  r.diagnostics = std::move(ck.diags);
  return r;
}

CheckResult check_exp(const Env& gamma, const Env& omega, const Formula& expected,
                      const ExprP& e, const CheckOptions& opt) {
  Checker ck(opt);
  CheckResult r;
  r.ok = ck.exp(gamma, omega, expected, e);
  if (!r.ok && ck.diags.empty())
    ck.diags.push_back(Diagnostic{"T.ENV", "expression is annotated with the wrong type",
                                  e->region, expected, e->type, {}});
  r.diagnostics = std::move(ck.diags);
  return r;
}

CheckResult check_program(const SeqP& s, const OutSpec& spec, const CheckOptions& opt) {
  return check_sequence(Env{}, Env{}, spec, s, opt);
}

}  // namespace loopw
