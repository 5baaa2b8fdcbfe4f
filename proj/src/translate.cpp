#include <algorithm>
#include <functional>
#include <map>

#include "loopw/checker.hpp"
#include "loopw/functional.hpp"

namespace loopw {

namespace {

using K = FTerm::Kind;

FTermP node(FTerm t) { return std::make_shared<const FTerm>(std::move(t)); }

FTermP var_ref(const Ident& x, FFormula type) {
  FTerm t;
  t.kind = K::Var;
  t.name = x;
  t.type = std::move(type);
  return node(std::move(t));
}

FTermP unit(FFormula type, std::optional<unsigned> ob = std::nullopt) {
  FTerm t;
  t.kind = K::Unit;
  t.type = std::move(type);
  t.ob = ob;
  return node(std::move(t));
}

FTermP tuple(std::vector<FTermP> elems) {
  if (elems.size() == 1) return elems[0];
  FTerm t;
  t.kind = K::Tuple;
  std::vector<FFormula> types;
  for (const auto& e : elems) types.push_back(e->type);
  t.type = and_of(std::move(types));
  t.kids = std::move(elems);
  return node(std::move(t));
}

FTermP let(std::vector<Ident> names, FTermP bound, FTermP body) {
  FTerm t;
  t.kind = K::Let;
  t.type = body->type;
  t.names = std::move(names);
  t.kids = {std::move(bound), std::move(body)};
  return node(std::move(t));
}

FFormula tr(const Formula& f) { return translate_formula(f); }

FFormula tr(const std::optional<Formula>& f) {
  if (!f) throw TranslateError("missing type annotation");
  return translate_formula(*f);
}

std::vector<FFormula> tr_all(const std::vector<Formula>& fs) {
  std::vector<FFormula> r;
  for (const auto& f : fs) r.push_back(tr(f));
  return r;
}

FFormula spec_type(const OutSpec& spec) {
  return FFormula::exists(spec.exists, and_of(tr_all(spec.vars.image())));
}

const Term& nat_term(const std::optional<Formula>& f, const char* what) {
  if (!f || f->kind() != Formula::Kind::Nat)
    throw TranslateError(std::string(what) + " is not typed nat(t)");
  return f->terms()[0];
}

const ProcType& proc_type(const std::optional<Formula>& f, const char* what) {
  if (!f || f->kind() != Formula::Kind::Proc)
    throw TranslateError(std::string(what) + " is not a procedure");
  return f->proc();
}

std::vector<Term> instance(const std::vector<Ident>& binders, const std::optional<Substitution>& w) {
  std::vector<Term> r;
  for (const auto& b : binders) {
    const Term* t = w ? subst_lookup(*w, b) : nullptr;
    r.push_back(t ? *t : Term::var(b));
  }
  return r;
}

bool continuation_like(FFormula f) {
  while (f.kind() == FFormula::Kind::Forall) f = f.parts()[0];
  return f.kind() == FFormula::Kind::Bot ||
         (f.kind() == FFormula::Kind::Impl && f.parts()[1].kind() == FFormula::Kind::Bot);
}

class Translator {
public:
  std::function<FTermP()> top_result;
  std::vector<Ident> top_vars;
  std::map<Ident, Formula> top_csts;

  FTermP seq(const SeqP& s, const OutSpec& spec, bool top) {
    switch (s->kind) {
      case Sequence::Kind::Empty:
        if (top && top_result) return top_result();
        return end(s->witness.value_or(Substitution{}), spec);
      case Sequence::Kind::Subst:
        if (top && top_result) return seq(s->next, spec, top);
        return subst(*s, spec, top);
      case Sequence::Kind::Cst: {
        FTermP v = expr(s->value);
        if (top && s->type) top_csts.insert_or_assign(s->name, *s->type);
        return let({s->name}, v, seq(s->next, spec, top));
      }
      case Sequence::Kind::Var: {
        FTermP v = expr(s->value);
        if (top && std::find(top_vars.begin(), top_vars.end(), s->name) == top_vars.end())
          top_vars.push_back(s->name);
        return let({s->name}, v, seq(s->next, spec, top));
      }
      case Sequence::Kind::Seq:
        return cmd(*s->cmd, s->next, spec, top);
    }
    throw TranslateError("unknown sequence node");
  }

  FTermP expr(const ExprP& e) {
    switch (e->kind) {
      case Expr::Kind::Id:
        return var_ref(e->id, tr(e->type));
      case Expr::Kind::Num: {
        FTerm t;
        t.kind = K::NumLit;
        t.num = e->num;
        t.type = e->type ? tr(e->type) : FFormula::nat(Term::numeral(e->num));
        return node(std::move(t));
      }
      case Expr::Kind::Star:
        return unit(tr(e->type), e->ob);
      case Expr::Kind::Cast:
        return expr(e->inner);
      case Expr::Kind::Coerce: {
        FTerm t;
        t.kind = K::Coerce;
        t.type = tr(e->type);
        t.hole = e->hole;
        t.context = tr(e->target);
        t.kids = {expr(e->inner), expr(e->justification)};
        return node(std::move(t));
      }
      case Expr::Kind::Lemma: {
        FTerm t;
        t.kind = K::Lemma;
        t.type = tr(e->type ? e->type : e->target);
        t.hyps = tr_all(e->hyps);
        return node(std::move(t));
      }
      case Expr::Kind::Proc:
        return lam(*e);
    }
    throw TranslateError("unknown expression node");
  }

private:
  FTermP end(const Substitution& w, const OutSpec& spec) {
    std::vector<FTermP> elems;
    for (const auto& [x, f] : spec.vars) elems.push_back(var_ref(x, tr(subst_formula_multi(f, w))));
    FTermP t = tuple(std::move(elems));
    if (spec.exists.empty()) return t;
    FTerm p;
    p.kind = K::Pack;
    p.type = spec_type(spec);
    for (const auto& j : spec.exists) {
      const Term* v = subst_lookup(w, j);
      p.witness.emplace_back(j, v ? *v : Term::var(j));
    }
    p.kids = {t};
    return node(std::move(p));
  }

  FTermP subst(const Sequence& s, const OutSpec& spec, bool top) {
    const auto& jt = s.justification->type;
    if (!jt || jt->kind() != Formula::Kind::Equal)
      throw TranslateError("subst justification is not an equality");
    const Term& n = jt->terms()[0];
    // Context in the order of the out-specification.
    Env delta;
    for (const auto& k : spec.vars.keys()) {
      const Formula* f = s.context.find(k);
      if (!f) throw TranslateError("subst context misses " + k.str());
      delta = delta.updated(k, *f);
    }
    OutSpec inner{spec.exists, subst_env(delta, Substitution{{s.hole, n}})};
    FTerm t;
    t.kind = K::Coerce;
    t.type = spec_type(spec);
    t.hole = s.hole;
    t.context = spec_type(OutSpec{spec.exists, delta});
    t.kids = {seq(s.next, inner, top), expr(s.justification)};
    return node(std::move(t));
  }

  FTermP bind(const OutSpec& spec, FTermP bound, FTermP rest) {
    return bind(spec.exists, spec.vars.keys(), std::move(bound), std::move(rest));
  }

  FTermP bind(const std::vector<Ident>& exists, std::vector<Ident> names, FTermP bound,
              FTermP rest) {
    if (exists.empty()) return let(std::move(names), std::move(bound), std::move(rest));
    FTerm t;
    t.kind = K::Unpack;
    t.type = rest->type;
    t.binders = exists;
    t.names = std::move(names);
    t.kids = {std::move(bound), std::move(rest)};
    return node(std::move(t));
  }

  FTermP lam(const Expr& e) {
    FTermP body = seq(e.body, OutSpec{e.out_vars, e.rets}, false);
    const auto rets = e.rets.keys();
    for (auto it = rets.rbegin(); it != rets.rend(); ++it)
      if (free_program_vars(body).count(*it))
        body = let({*it}, unit(tr(Formula::top())), body);
    FTerm t;
    t.kind = K::Lam;
    t.binders = e.in_vars;
    for (const auto& [x, f] : e.params) t.params.emplace_back(x, tr(f));
    std::vector<FFormula> ps;
    for (const auto& p : t.params) ps.push_back(p.second);
    t.type = arrow(e.in_vars, std::move(ps), body->type);
    t.kids = {body};
    return node(std::move(t));
  }

  FTermP rec(const Command& c) {
    if (!c.spec) throw TranslateError("loop without annotation");
    const Env& sigma = c.spec->vars;
    const Ident lid = c.logical.value_or(c.name);
    FTermP bound = expr(c.expr);
    const Term& nu = nat_term(c.expr->type, "loop bound");

    std::vector<FTermP> base;
    for (const auto& [x, f] : sigma) base.push_back(var_ref(x, tr(subst_formula(f, lid, Term::zero()))));

    OutSpec body_spec{{}, subst_env(sigma, Substitution{{lid, Term::succ(Term::var(lid))}})};
    FTermP body = seq(c.body, body_spec, false);

    FTerm inner;
    inner.kind = K::Lam;
    std::vector<FFormula> ps;
    for (const auto& [x, f] : sigma) {
      inner.params.emplace_back(x, tr(f));
      ps.push_back(tr(f));
    }
    inner.type = arrow({}, ps, body->type);
    inner.kids = {body};

    FTerm step;
    step.kind = K::Lam;
    step.binders = {lid};
    step.params = {{c.name, FFormula::nat(Term::var(lid))}};
    FTermP inner_p = node(std::move(inner));
    step.type = arrow({lid}, {FFormula::nat(Term::var(lid))}, inner_p->type);
    step.kids = {inner_p};

    FTerm r;
    r.kind = K::Rec;
    r.binders = {lid};
    r.context = and_of(std::move(ps));
    r.type = subst_fformula(r.context, Substitution{{lid, nu}});
    r.kids = {bound, tuple(std::move(base)), node(std::move(step))};
    return node(std::move(r));
  }

  FTermP cmd(const Command& c, const SeqP& next, const OutSpec& spec, bool top) {
    switch (c.kind) {
      case Command::Kind::Assign:
        return let({c.name}, expr(c.expr), seq(next, spec, top));
      case Command::Kind::Inc:
      case Command::Kind::Dec: {
        const Term& n = nat_term(c.type, "counter");
        const bool inc = c.kind == Command::Kind::Inc;
        FTerm t;
        t.kind = inc ? K::Succ : K::Pred;
        t.type = FFormula::nat(inc ? Term::succ(n) : Term::pred(n));
        t.kids = {var_ref(c.name, FFormula::nat(n))};
        return let({c.name}, node(std::move(t)), seq(next, spec, top));
      }
      case Command::Kind::Block: {
        if (!c.spec) throw TranslateError("block without annotation");
        FTermP body = seq(c.body, *c.spec, false);
        return bind(*c.spec, body, seq(next, spec, top));
      }
      case Command::Kind::Label: {
        if (!c.spec) throw TranslateError("label without annotation");
        FTerm t;
        t.kind = K::Callcc;
        t.name = c.name;
        t.binders = c.spec->exists;
        t.context = tr(label_type(*c.spec));
        t.type = spec_type(*c.spec);
        t.kids = {seq(c.body, *c.spec, false)};
        return bind(*c.spec, node(std::move(t)), seq(next, spec, top));
      }
      case Command::Kind::For: {
        FTermP r = rec(c);
        return let(c.spec->vars.keys(), r, seq(next, spec, top));
      }
      case Command::Kind::Call: {
        const ProcType& p = proc_type(c.expr->type, "callee");
        FTerm t;
        t.kind = K::App;
        t.kids.push_back(expr(c.expr));
        for (const auto& a : c.args) t.kids.push_back(expr(a));
        t.inst = instance(p.in_vars, c.witness);
        if (!c.out_types) throw TranslateError("call without output types");
        t.type = FFormula::exists(p.out_vars, and_of(tr_all(*c.out_types)));
        return bind(p.out_vars, c.outs, node(std::move(t)), seq(next, spec, top));
      }
      case Command::Kind::Jump: {
        const ProcType& p = proc_type(c.expr->type, "jump target");
        FTerm t;
        t.kind = K::Throw;
        t.type = FFormula::bot();
        t.kids.push_back(expr(c.expr));
        for (const auto& a : c.args) t.kids.push_back(expr(a));
        t.inst = instance(p.in_vars, c.witness);
        FTermP th = node(std::move(t));
        const FFormula want = spec_type(spec);
        if (want.kind() == FFormula::Kind::Bot) return th;
        FTerm ab;
        ab.kind = K::Abort;
        ab.type = want;
        ab.kids = {th};
        return node(std::move(ab));
      }
    }
    throw TranslateError("unknown command");
  }
};

void collect_free(const FTermP& t, IdentSet& bound, IdentSet& out) {
  auto under = [&](const std::vector<Ident>& xs, const FTermP& body) {
    IdentSet b = bound;
    b.insert(xs.begin(), xs.end());
    collect_free(body, b, out);
  };
  switch (t->kind) {
    case K::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case K::Lam: {
      std::vector<Ident> xs;
      for (const auto& p : t->params) xs.push_back(p.first);
      under(xs, t->kids[0]);
      return;
    }
    case K::Let:
    case K::Unpack:
      collect_free(t->kids[0], bound, out);
      under(t->names, t->kids[1]);
      return;
    case K::Callcc:
      under({t->name}, t->kids[0]);
      return;
    default:
      for (const auto& k : t->kids) collect_free(k, bound, out);
  }
}

}  // namespace

IdentSet free_program_vars(const FTermP& t) {
  IdentSet bound, out;
  collect_free(t, bound, out);
  return out;
}

FTermP translate_program(const SeqP& s, const OutSpec& spec) {
  Translator tr;
  return tr.seq(s, spec, true);
}

FTermP translate_run(const SeqP& s, const std::optional<Ident>& entry,
                     const std::vector<std::uint64_t>& args) {
  Translator t;
  t.top_result = [&]() -> FTermP {
    if (!entry) {
      std::vector<FTermP> vs;
      for (const auto& x : t.top_vars) vs.push_back(var_ref(x, FFormula::truth()));
      return tuple(std::move(vs));
    }
    auto it = t.top_csts.find(*entry);
    if (it == t.top_csts.end())
      throw TranslateError("no top-level constant named " + entry->str());
    const ProcType& p = proc_type(it->second, "entry");
    const Ident halt("halt", 1);
    FTerm app;
    app.kind = K::App;
    app.kids.push_back(var_ref(*entry, tr(it->second)));
    std::size_t next = 0;
    for (const auto& f : p.in_types) {
      if (f.kind() == Formula::Kind::Nat) {
        if (next >= args.size())
          throw TranslateError("not enough arguments for " + entry->str());
        FTerm n;
        n.kind = K::NumLit;
        n.num = args[next++];
        n.type = FFormula::nat(Term::numeral(n.num));
        app.kids.push_back(node(std::move(n)));
      } else {
        app.kids.push_back(var_ref(halt, tr(f)));
      }
    }
    if (next != args.size()) throw TranslateError("too many arguments for " + entry->str());
    app.type = FFormula::exists(p.out_vars, and_of(tr_all(p.out_types)));
    std::vector<Ident> outs;
    std::vector<FTermP> kept;
    for (std::size_t i = 0; i < p.out_types.size(); ++i) {
      outs.emplace_back("out", static_cast<unsigned>(i + 1));
      FFormula f = tr(p.out_types[i]);
      if (!continuation_like(f)) kept.push_back(var_ref(outs.back(), f));
    }
    FTermP result = tuple(std::move(kept));
    FTermP body = let(outs, node(std::move(app)), result);
    FTerm cc;
    cc.kind = K::Callcc;
    cc.name = halt;
    cc.type = body->type;
    cc.kids = {body};
    return node(std::move(cc));
  };
  return t.seq(s, {}, true);
}

}  // namespace loopw
