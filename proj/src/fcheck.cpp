#include "loopw/functional.hpp"

namespace loopw {

namespace {

using K = FTerm::Kind;

FFormula neg(const FFormula& a) {
  if (a.kind() == FFormula::Kind::And && a.parts().empty()) return FFormula::bot();
  return FFormula::impl(a, FFormula::bot());
}

bool is_truth(const FFormula& f) { return f.kind() == FFormula::Kind::And && f.parts().empty(); }

class FChecker {
public:
  std::optional<FDiagnostic> diag;

  bool check(const FTermP& t, const FEnv& ctx) {
    switch (t->kind) {
      case K::Var: {
        const FFormula* f = ctx.find(t->name);
        if (!f) return fail("F.VAR", t->name.str() + " is not in scope");
        return same("F.VAR", *f, t->type, t->name.str());
      }
      case K::Unit:
        if (t->type.kind() == FFormula::Kind::Equal || is_truth(t->type)) return true;
        return fail("F.UNIT", "() proves only equalities, not " + to_string(t->type));
      case K::Tuple: {
        std::vector<FFormula> ts;
        for (const auto& k : t->kids) {
          if (!check(k, ctx)) return false;
          ts.push_back(k->type);
        }
        if (ts.size() == 1) return fail("F.TUPLE", "one-element tuple");
        return same("F.TUPLE", FFormula::conj(std::move(ts)), t->type, "tuple");
      }
      case K::Proj: {
        if (!check(t->kids[0], ctx)) return false;
        const FFormula& a = t->kids[0]->type;
        if (a.kind() != FFormula::Kind::And || t->index >= a.parts().size())
          return fail("F.PROJ", "projection out of " + to_string(a));
        return same("F.PROJ", a.parts()[t->index], t->type, "projection");
      }
      case K::Lam:
        return lam(t, ctx);
      case K::App:
      case K::Throw:
        return app(t, ctx);
      case K::Let: {
        if (!check(t->kids[0], ctx)) return false;
        auto inner = bind("F.LET", t->names, t->kids[0]->type, ctx);
        if (!inner || !check(t->kids[1], *inner)) return false;
        return same("F.LET", t->kids[1]->type, t->type, "let body");
      }
      case K::Zero:
        return same("F.ZERO", FFormula::nat(Term::zero()), t->type, "zero");
      case K::NumLit:
        return same("F.NUM", FFormula::nat(Term::numeral(t->num)), t->type,
                    std::to_string(t->num));
      case K::Succ:
      case K::Pred: {
        const char* rule = t->kind == K::Succ ? "F.SUCC" : "F.PRED";
        if (!check(t->kids[0], ctx)) return false;
        const FFormula& a = t->kids[0]->type;
        if (a.kind() != FFormula::Kind::Nat) return fail(rule, "argument is not nat(t)");
        const Term& n = a.terms()[0];
        return same(rule, FFormula::nat(t->kind == K::Succ ? Term::succ(n) : Term::pred(n)),
                    t->type, "result");
      }
      case K::Rec:
        return rec(t, ctx);
      case K::Coerce: {
        if (!check(t->kids[0], ctx) || !check(t->kids[1], ctx)) return false;
        const FFormula& eq = t->kids[1]->type;
        if (eq.kind() != FFormula::Kind::Equal)
          return fail("F.COERCE", "justification is not an equality");
        const FFormula from = subst_fformula(t->context, {{t->hole, eq.terms()[0]}});
        const FFormula to = subst_fformula(t->context, {{t->hole, eq.terms()[1]}});
        return same("F.COERCE", t->kids[0]->type, from, "coerced term") &&
               same("F.COERCE", to, t->type, "coercion result");
      }
      case K::Pack: {
        if (!check(t->kids[0], ctx)) return false;
        const FFormula& e = t->type;
        if (e.kind() != FFormula::Kind::Exists || e.binders().size() != t->witness.size())
          return fail("F.PACK", "pack at non-existential " + to_string(e));
        Substitution w;
        for (std::size_t i = 0; i < e.binders().size(); ++i)
          w.emplace_back(e.binders()[i], t->witness[i].second);
        return same("F.PACK", t->kids[0]->type, subst_fformula(e.parts()[0], w), "packed term");
      }
      case K::Unpack:
        return unpack(t, ctx);
      case K::Callcc: {
        const FFormula& a = t->type;
        FFormula body = a;
        if (!t->binders.empty()) {
          if (a.kind() != FFormula::Kind::Exists || a.binders().size() != t->binders.size())
            return fail("F.CALLCC", "label result " + to_string(a) + " is not existential");
          body = a.parts()[0];
        }
        const std::vector<Ident> ks = t->binders.empty() ? std::vector<Ident>{} : a.binders();
        if (!alpha_equal(t->context, FFormula::forall(ks, neg(body))) &&
            !alpha_equal(t->context, FFormula::forall(ks, FFormula::impl(body, FFormula::bot()))))
          return fail("F.CALLCC", "continuation " + t->name.str() + " : " + to_string(t->context) +
                                      " does not refute " + to_string(a));
        if (!check(t->kids[0], ctx.updated(t->name, t->context))) return false;
        return same("F.CALLCC", t->kids[0]->type, a, "callcc body");
      }
      case K::Abort:
        if (!check(t->kids[0], ctx)) return false;
        if (t->kids[0]->type.kind() != FFormula::Kind::Bot)
          return fail("F.ABORT", "aborted term proves " + to_string(t->kids[0]->type));
        return true;
      case K::Lemma:
        for (const auto& h : t->hyps) {
          bool found = false;
          for (const auto& f : ctx.image())
            if (alpha_equal(f, h)) found = true;
          if (!found) return fail("F.LEMMA", "hypothesis " + to_string(h) + " is not in scope");
        }
        return true;
    }
    return fail("F.TERM", "unknown node");
  }

private:
  bool fail(const std::string& rule, const std::string& msg) {
    if (!diag) diag = FDiagnostic{rule, msg};
    return false;
  }

  bool same(const char* rule, const FFormula& have, const FFormula& want, const std::string& what) {
    if (alpha_equal(have, want)) return true;
    return fail(rule, what + " proves " + to_string(have) + ", annotated " + to_string(want));
  }

  std::optional<FEnv> bind(const char* rule, const std::vector<Ident>& names, const FFormula& f,
                           const FEnv& ctx) {
    if (names.size() == 1) return ctx.updated(names[0], f);
    if (names.empty()) return ctx;
    if (f.kind() != FFormula::Kind::And || f.parts().size() != names.size()) {
      fail(rule, "cannot bind " + std::to_string(names.size()) + " names to " + to_string(f));
      return std::nullopt;
    }
    FEnv r = ctx;
    for (std::size_t i = 0; i < names.size(); ++i) r = r.updated(names[i], f.parts()[i]);
    return r;
  }

  // Term variables free in the hypotheses a term actually uses.
  static IdentSet used_hyp_vars(const FTermP& t, const FEnv& ctx,
                                const std::vector<Ident>& except = {}) {
    IdentSet r;
    for (const auto& x : free_program_vars(t)) {
      if (std::find(except.begin(), except.end(), x) != except.end()) continue;
      if (const FFormula* f = ctx.find(x)) {
        IdentSet v = free_term_vars(*f);
        r.insert(v.begin(), v.end());
      }
    }
    return r;
  }

  bool lam(const FTermP& t, const FEnv& ctx) {
    const IdentSet hv = used_hyp_vars(t, ctx);
    for (const auto& b : t->binders)
      if (hv.count(b)) return fail("F.LAM", "bound variable " + b.str() + " is free in a hypothesis");
    FEnv inner = ctx;
    std::vector<FFormula> ps;
    for (const auto& [x, f] : t->params) {
      inner = inner.updated(x, f);
      ps.push_back(f);
    }
    if (!check(t->kids[0], inner)) return false;
    return same("F.LAM", arrow(t->binders, std::move(ps), t->kids[0]->type), t->type, "function");
  }

  bool app(const FTermP& t, const FEnv& ctx) {
    const char* rule = t->kind == K::App ? "F.APP" : "F.THROW";
    for (const auto& k : t->kids)
      if (!check(k, ctx)) return false;
    FFormula f = t->kids[0]->type;
    if (!t->inst.empty()) {
      if (f.kind() != FFormula::Kind::Forall || f.binders().size() != t->inst.size())
        return fail(rule, "cannot instantiate " + to_string(f));
      Substitution w;
      for (std::size_t i = 0; i < t->inst.size(); ++i) w.emplace_back(f.binders()[i], t->inst[i]);
      f = subst_fformula(f.parts()[0], w);
    }
    if (t->kids.size() > 1) {
      if (f.kind() != FFormula::Kind::Impl) return fail(rule, "applying a non-function " + to_string(f));
      std::vector<FFormula> args;
      for (std::size_t i = 1; i < t->kids.size(); ++i) args.push_back(t->kids[i]->type);
      if (!same(rule, and_of(std::move(args)), f.parts()[0], "arguments")) return false;
      f = f.parts()[1];
    }
    if (t->kind == K::Throw && f.kind() != FFormula::Kind::Bot)
      return fail(rule, "throw target does not refute its arguments");
    return same(rule, f, t->type, "application");
  }

  bool rec(const FTermP& t, const FEnv& ctx) {
    for (const auto& k : t->kids)
      if (!check(k, ctx)) return false;
    const Ident& lid = t->binders[0];
    const FFormula& n = t->kids[0]->type;
    if (n.kind() != FFormula::Kind::Nat) return fail("F.REC", "recursion bound is not nat(t)");
    const FFormula& motive = t->context;
    const Term i = Term::var(lid);
    if (!same("F.REC", t->kids[1]->type, subst_fformula(motive, {{lid, Term::zero()}}), "base"))
      return false;
    const FFormula next = subst_fformula(motive, {{lid, Term::succ(i)}});
    const FFormula step = FFormula::forall({lid}, FFormula::impl(FFormula::nat(i), FFormula::impl(motive, next)));
    const FFormula& have = t->kids[2]->type;
    bool ok = alpha_equal(have, step);
    if (!ok && is_truth(motive))
      ok = alpha_equal(have, FFormula::forall({lid}, FFormula::impl(FFormula::nat(i), next)));
    if (!ok)
      return fail("F.REC", "step proves " + to_string(have) + ", expected " + to_string(step));
    return same("F.REC", subst_fformula(motive, {{lid, n.terms()[0]}}), t->type, "recursion");
  }

  bool unpack(const FTermP& t, const FEnv& ctx) {
    if (!check(t->kids[0], ctx)) return false;
    const FFormula& e = t->kids[0]->type;
    if (e.kind() != FFormula::Kind::Exists || e.binders().size() != t->binders.size())
      return fail("F.UNPACK", "unpacking a non-existential " + to_string(e));
    Substitution ren;
    for (std::size_t i = 0; i < t->binders.size(); ++i)
      ren.emplace_back(e.binders()[i], Term::var(t->binders[i]));
    const FFormula body_type = subst_fformula(e.parts()[0], ren);
    auto inner = bind("F.UNPACK", t->names, body_type, ctx);
    if (!inner || !check(t->kids[1], *inner)) return false;
    const IdentSet hv = used_hyp_vars(t->kids[1], ctx, t->names);
    const IdentSet rv = free_term_vars(t->kids[1]->type);
    for (const auto& b : t->binders) {
      if (hv.count(b)) return fail("F.UNPACK", "witness " + b.str() + " is free in a hypothesis");
      if (rv.count(b)) return fail("F.UNPACK", "witness " + b.str() + " escapes into the result");
    }
    return same("F.UNPACK", t->kids[1]->type, t->type, "unpack body");
  }
};

}  // namespace

std::optional<FDiagnostic> fcheck(const FTermP& t, const FFormula& expected, const FEnv& hyps) {
  FChecker c;
  if (!c.check(t, hyps)) return c.diag;
  if (!alpha_equal(t->type, expected))
    return FDiagnostic{"F.GOAL", "term proves " + to_string(t->type) + ", expected " +
                                     to_string(expected)};
  return std::nullopt;
}

}  // namespace loopw
