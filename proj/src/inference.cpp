#include "loopw/inference.hpp"

#include <algorithm>

#include "loopw/parser.hpp"

namespace loopw {

// ------------------------------------------------------------------ slots

std::size_t count_slots(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
      return 2;
    case Formula::Kind::Nat:
      return 1;
    case Formula::Kind::Proc: {
      std::size_t n = 0;
      for (const auto& g : f.proc().in_types) n += count_slots(g);
      for (const auto& g : f.proc().out_types) n += count_slots(g);
      return n;
    }
    default:
      return 0;
  }
}

namespace {

Formula replace_slot_rec(const Formula& f, std::size_t& slot, const Term& t, bool& done) {
  if (done) return f;
  switch (f.kind()) {
    case Formula::Kind::Equal: {
      if (slot >= 2) {
        slot -= 2;
        return f;
      }
      done = true;
      return slot == 0 ? Formula::equal(t, f.terms()[1]) : Formula::equal(f.terms()[0], t);
    }
    case Formula::Kind::Nat:
      if (slot >= 1) {
        slot -= 1;
        return f;
      }
      done = true;
      return Formula::nat(t);
    case Formula::Kind::Proc: {
      ProcType p = f.proc();
      for (auto& g : p.in_types) g = replace_slot_rec(g, slot, t, done);
      for (auto& g : p.out_types) g = replace_slot_rec(g, slot, t, done);
      return Formula::proc(std::move(p));
    }
    default:
      return f;
  }
}

const Term* slot_term(const Formula& f, std::size_t& slot) {
  switch (f.kind()) {
    case Formula::Kind::Equal:
    case Formula::Kind::Nat: {
      const auto n = f.terms().size();
      if (slot < n) return &f.terms()[slot];
      slot -= n;
      return nullptr;
    }
    case Formula::Kind::Proc:
      for (const auto& g : f.proc().in_types)
        if (const Term* t = slot_term(g, slot)) return t;
      for (const auto& g : f.proc().out_types)
        if (const Term* t = slot_term(g, slot)) return t;
      return nullptr;
    default:
      return nullptr;
  }
}

bool mentions(const Term& t, const IdentSet& vars) {
  if (vars.empty()) return false;
  for (const auto& v : free_vars(t))
    if (vars.count(v)) return true;
  return false;
}

bool diff_rec(const Formula& h, const Formula& w, std::size_t& idx, IdentSet& bound,
              std::vector<SlotDiff>& out) {
  if (h.kind() != w.kind()) return false;
  switch (h.kind()) {
    case Formula::Kind::Bot:
      return true;
    case Formula::Kind::Var:
      return h.var_name() == w.var_name();
    case Formula::Kind::Equal:
    case Formula::Kind::Nat:
      for (std::size_t k = 0; k < h.terms().size(); ++k, ++idx) {
        const Term& a = h.terms()[k];
        const Term& b = w.terms()[k];
        if (a == b) continue;
        if (mentions(a, bound) || mentions(b, bound)) return false;
        out.push_back(SlotDiff{idx, a, b});
      }
      return true;
    case Formula::Kind::Proc: {
      const ProcType& p = h.proc();
      const ProcType& q = w.proc();
      if (p.in_types.size() != q.in_types.size() || p.out_types.size() != q.out_types.size())
        return false;
      if (p.in_vars != q.in_vars || p.out_vars != q.out_vars) {
        if (!alpha_equal(h, w)) return false;
        idx += count_slots(h);
        return true;
      }
      IdentSet saved = bound;
      bound.insert(p.in_vars.begin(), p.in_vars.end());
      bound.insert(p.out_vars.begin(), p.out_vars.end());
      bool ok = true;
      for (std::size_t k = 0; ok && k < p.in_types.size(); ++k)
        ok = diff_rec(p.in_types[k], q.in_types[k], idx, bound, out);
      for (std::size_t k = 0; ok && k < p.out_types.size(); ++k)
        ok = diff_rec(p.out_types[k], q.out_types[k], idx, bound, out);
      bound = std::move(saved);
      return ok;
    }
  }
  return false;
}

struct Matcher {
  const std::vector<Ident>& binders;
  Substitution w;
  bool conflict = false;

  bool is_binder(const Ident& v, const IdentSet& shadow) const {
    return !shadow.count(v) && std::find(binders.begin(), binders.end(), v) != binders.end();
  }

  void term(const Term& pat, const Term& act, const IdentSet& shadow, const IdentSet& act_bound) {
    if (pat.kind() == Term::Kind::Var && is_binder(pat.ident(), shadow)) {
      if (mentions(act, act_bound)) return;
      if (const Term* prev = subst_lookup(w, pat.ident())) {
        if (!(*prev == act)) conflict = true;
        return;
      }
      w.emplace_back(pat.ident(), act);
      return;
    }
    if (pat.kind() != act.kind() || pat.ident() != act.ident() ||
        pat.args().size() != act.args().size())
      return;
    for (std::size_t k = 0; k < pat.args().size(); ++k)
      term(pat.arg(k), act.arg(k), shadow, act_bound);
  }

  void formula(const Formula& pat, const Formula& act, const IdentSet& shadow,
               const IdentSet& act_bound) {
    if (pat.kind() != act.kind()) return;
    switch (pat.kind()) {
      case Formula::Kind::Equal:
      case Formula::Kind::Nat:
        for (std::size_t k = 0; k < pat.terms().size(); ++k)
          term(pat.terms()[k], act.terms()[k], shadow, act_bound);
        return;
      case Formula::Kind::Proc: {
        const ProcType& p = pat.proc();
        const ProcType& q = act.proc();
        if (p.in_types.size() != q.in_types.size() || p.out_types.size() != q.out_types.size())
          return;
        IdentSet sh = shadow, ab = act_bound;
        sh.insert(p.in_vars.begin(), p.in_vars.end());
        ab.insert(q.in_vars.begin(), q.in_vars.end());
        for (std::size_t k = 0; k < p.in_types.size(); ++k)
          formula(p.in_types[k], q.in_types[k], sh, ab);
        sh.insert(p.out_vars.begin(), p.out_vars.end());
        ab.insert(q.out_vars.begin(), q.out_vars.end());
        for (std::size_t k = 0; k < p.out_types.size(); ++k)
          formula(p.out_types[k], q.out_types[k], sh, ab);
        return;
      }
      default:
        return;
    }
  }
};

}  // namespace

Formula replace_slot(const Formula& f, std::size_t slot, const Term& t) {
  bool done = false;
  return replace_slot_rec(f, slot, t, done);
}

std::optional<std::vector<SlotDiff>> reconcile(const Formula& have, const Formula& want) {
  std::vector<SlotDiff> out;
  std::size_t idx = 0;
  IdentSet bound;
  if (!diff_rec(have, want, idx, bound, out)) return std::nullopt;
  return out;
}

std::optional<Substitution> solve_witness(const std::vector<Ident>& binders,
                                          const std::vector<Formula>& patterns,
                                          const std::vector<Formula>& actuals) {
  if (patterns.size() != actuals.size()) return std::nullopt;
  Matcher m{binders, {}};
  for (std::size_t k = 0; k < patterns.size(); ++k) m.formula(patterns[k], actuals[k], {}, {});
  if (m.conflict) return std::nullopt;
  Substitution ordered;
  for (const auto& b : binders) {
    const Term* t = subst_lookup(m.w, b);
    if (!t) return std::nullopt;
    ordered.emplace_back(b, *t);
  }
  return ordered;
}

namespace {

const Term* get_slot(const Formula& f, std::size_t slot) { return slot_term(f, slot); }

Env replace_env_slot(const Env& env, std::size_t slot, const Term& t) {
  Env r;
  bool done = false;
  for (const auto& [k, f] : env) r = r.updated(k, replace_slot_rec(f, slot, t, done));
  return r;
}

class Inferer {
public:
  Obligations obs;

  SeqP seq(const Env& gamma, const Env& omega, const OutSpec& spec, const SeqP& sp) {
    const Sequence& s = *sp;
    switch (s.kind) {
      case Sequence::Kind::Empty:
        return end_chain(omega, spec, s.region);
      case Sequence::Kind::Cst:
      case Sequence::Kind::Var: {
        const bool cst = s.kind == Sequence::Kind::Cst;
        Sequence r = s;
        r.value = expr(gamma, omega, s.value);
        r.type = r.value->type;
        r.next = cst ? seq(gamma.updated(s.name, *r.type), omega, spec, s.next)
                     : seq(gamma, omega.updated(s.name, *r.type), spec, s.next);
        return make(std::move(r));
      }
      case Sequence::Kind::Subst:
        error("T.SUBST-II", "substitution nodes are not allowed in source programs", s.region);
      case Sequence::Kind::Seq:
        return command(gamma, omega, spec, *s.cmd, s.next);
    }
    return sp;
  }

  ExprP expr(const Env& gamma, const Env& omega, const ExprP& ep) {
    const Expr& e = *ep;
    Expr r = e;
    switch (e.kind) {
      case Expr::Kind::Id: {
        const Formula* f = gamma.concat(omega).find(e.id);
        if (!f) error("T.ENV", "unbound identifier " + e.id.str(), e.region);
        r.type = *f;
        return make(std::move(r));
      }
      case Expr::Kind::Num:
        if (e.num > kMaxTermNumeral)
          error("T.NUM", "numeral " + std::to_string(e.num) + " is too large to encode", e.region);
        r.type = Formula::nat(Term::numeral(e.num));
        return make(std::move(r));
      case Expr::Kind::Star:
        r.type = Formula::top();
        return make(std::move(r));
      case Expr::Kind::Proc: {
        const IdentSet g = free_term_vars(gamma);
        for (const auto& i : e.in_vars)
          if (g.count(i))
            error("T.PROC", "in variable " + i.str() + " is already free in the constant environment",
                  e.region);
        const Env init = e.rets.map([](const Formula&) { return Formula::top(); });
        r.body = seq(gamma.concat(e.params), init, OutSpec{e.out_vars, e.rets}, e.body);
        r.type = Formula::proc(ProcType{e.in_vars, e.params.image(), e.out_vars, e.rets.image()});
        return make(std::move(r));
      }
      case Expr::Kind::Cast:
        if (e.inner->kind == Expr::Kind::Star) return star_at(*e.target, e.inner->region);
        return coerce(expr(gamma, omega, e.inner), *e.target, false, "T.SUBST-I", e.region);
      case Expr::Kind::Coerce:
      case Expr::Kind::Lemma:
        error("T.SUBST-I", "annotated expressions are not allowed in source programs", e.region);
    }
    return ep;
  }

private:
  [[noreturn]] static void error(const std::string& rule, const std::string& msg,
                                 const Region& reg, std::optional<Formula> expected = std::nullopt,
                                 std::optional<Formula> actual = std::nullopt) {
    throw InferError(Diagnostic{rule, msg, reg, std::move(expected), std::move(actual), {}});
  }

  unsigned emit(const Term& lhs, const Term& rhs) {
    Obligation ob;
    ob.id = static_cast<unsigned>(obs.size() + 1);
    ob.lhs = lhs;
    ob.rhs = rhs;
    obs.push_back(ob);
    return ob.id;
  }

  static Ident hole_for(unsigned id, const std::vector<Formula>& fs) {
    IdentSet used;
    for (const auto& f : fs) collect_all_idents(f, used);
    Ident h("var", id);
    if (!used.count(h)) return h;
    unsigned m = 0;
    for (const auto& u : used) m = std::max(m, u.index);
    return Ident("var", m + 1);
  }

  ExprP justification(const Term& n, const Term& m, const Region& reg) {
    Expr j;
    j.kind = Expr::Kind::Star;
    j.region = reg;
    j.type = Formula::equal(n, m);
    if (!(n == m)) j.ob = emit(n, m);
    return make(std::move(j));
  }

  ExprP star_at(const Formula& want, const Region& reg) {
    if (want.kind() != Formula::Kind::Equal)
      error("T.STAR", "* can only stand for an equality", reg, want);
    return justification(want.terms()[0], want.terms()[1], reg);
  }

  // Retype `a` to `want` through a chain of t.subst-i steps.
  ExprP coerce(ExprP a, const Formula& want, bool allow_alpha, const char* rule,
               const Region& reg) {
    const Formula have = *a->type;
    if (have == want || (allow_alpha && alpha_equal(have, want))) return a;
    auto diffs = reconcile(have, want);
    if (!diffs)
      error(rule, "cannot convert " + to_string(have) + " to " + to_string(want), reg, want,
            have);
    Formula cur = have;
    for (const auto& d : *diffs) {
      const unsigned next_id = static_cast<unsigned>(obs.size() + 1);
      const Ident h = hole_for(next_id, {cur, want});
      const Formula ctx = replace_slot(cur, d.slot, Term::var(h));
      if (!(subst_formula(ctx, h, d.have) == cur))
        error(rule, "cannot isolate the differing term in " + to_string(cur), reg, want, have);
      Expr c;
      c.kind = Expr::Kind::Coerce;
      c.region = reg;
      c.inner = a;
      c.target = ctx;
      c.hole = h;
      c.justification = justification(d.have, d.want, reg);
      cur = subst_formula(ctx, h, d.want);
      c.type = cur;
      a = make(std::move(c));
    }
    if (!(cur == want) && !(allow_alpha && alpha_equal(cur, want)))
      error(rule, "cannot convert " + to_string(have) + " to " + to_string(want), reg, want,
            have);
    return a;
  }

  // Sequence end: witness for the existentials, then t.subst-ii layers for
  // every term slot where the environment differs from the out type.
  SeqP end_chain(const Env& omega, const OutSpec& spec, const Region& reg) {
    Env have;
    for (const auto& [k, f] : spec.vars) {
      const Formula* cur = omega.find(k);
      if (!cur) error("T.EMPTY", k.str() + " is not in scope at the end of the sequence", reg);
      have = have.updated(k, *cur);
    }
    auto w = solve_witness(spec.exists, spec.vars.image(), have.image());
    if (!w)
      error("T.EMPTY", "cannot determine a witness for {" + join_idents(spec.exists) + "}", reg);
    const IdentSet exists(spec.exists.begin(), spec.exists.end());

    struct Layer {
      std::size_t slot;
      Term n, m;
    };
    std::vector<Layer> layers;
    std::size_t offset = 0;
    for (const auto& [k, pattern] : spec.vars) {
      const Formula want = subst_formula_multi(pattern, *w);
      const Formula& got = *have.find(k);
      auto diffs = reconcile(got, want);
      if (!diffs)
        error("T.EMPTY", k.str() + " has type " + to_string(got) + ", expected " + to_string(want),
              reg, want, got);
      for (const auto& d : *diffs) {
        const Term* pt = get_slot(pattern, d.slot);
        if (!pt || mentions(*pt, exists))
          error("T.EMPTY",
                k.str() + ": cannot rewrite a term that mentions an existential variable", reg,
                want, got);
        layers.push_back(Layer{offset + d.slot, d.have, *pt});
      }
      offset += count_slots(pattern);
    }

    // Outermost layer first.
    std::vector<Sequence> nodes;
    Env outer = spec.vars;
    for (const auto& l : layers) {
      std::vector<Formula> all = outer.image();
      const unsigned next_id = static_cast<unsigned>(obs.size() + 1);
      const Ident h = hole_for(next_id, all);
      const Env ctx = replace_env_slot(outer, l.slot, Term::var(h));
      if (!(subst_env(ctx, {{h, l.m}}) == outer))
        error("T.SUBST-II", "cannot isolate the differing term at the end of the sequence", reg);
      Sequence s;
      s.kind = Sequence::Kind::Subst;
      s.region = reg;
      s.context = ctx;
      s.hole = h;
      s.justification = justification(l.n, l.m, reg);
      nodes.push_back(std::move(s));
      outer = subst_env(ctx, {{h, l.n}});
    }
    if (!subst_env(outer, *w).same_bindings(have))
      error("T.EMPTY", "internal: end-of-sequence reconciliation failed", reg);

    SeqP cur = empty_seq(*w);
    {
      Sequence e = *cur;
      e.region = reg;
      cur = make(std::move(e));
    }
    for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
      it->next = cur;
      cur = make(std::move(*it));
    }
    return cur;
  }

  void fresh_existentials(const std::vector<Ident>& ks, const Env& gamma, const Env& omega,
                          const OutSpec& spec, const char* rule, const Region& reg) {
    IdentSet bad = free_term_vars(gamma);
    const IdentSet w = free_term_vars(omega);
    bad.insert(w.begin(), w.end());
    const IdentSet out = free_term_vars(spec.vars);
    for (const auto& k : ks) {
      if (bad.count(k))
        error(rule, "existential " + k.str() + " is not fresh for the environment", reg);
      if (std::find(spec.exists.begin(), spec.exists.end(), k) == spec.exists.end() &&
          out.count(k))
        error(rule, "existential " + k.str() + " escapes into the out type", reg);
    }
  }

  // Arguments of a call or jump against `binders`/`formals`.
  std::pair<std::vector<ExprP>, Substitution> arguments(
      const Env& gamma, const Env& omega, const std::vector<Ident>& binders,
      const std::vector<Formula>& formals, const std::vector<ExprP>& args, const char* rule,
      const Region& reg) {
    if (formals.size() != args.size())
      error(rule,
            "expected " + std::to_string(formals.size()) + " arguments, got " +
                std::to_string(args.size()),
            reg);
    std::vector<ExprP> inferred(args.size());
    std::vector<Formula> pats, acts;
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (args[k]->kind == Expr::Kind::Star) continue;
      inferred[k] = expr(gamma, omega, args[k]);
      pats.push_back(formals[k]);
      acts.push_back(*inferred[k]->type);
    }
    auto w = solve_witness(binders, pats, acts);
    if (!w)
      error(rule, "cannot determine a witness for {" + join_idents(binders) + "} from the arguments",
            reg);
    const auto inst = subst_formulas(formals, *w);
    std::vector<ExprP> out;
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (!inferred[k])
        out.push_back(star_at(inst[k], args[k]->region));
      else
        out.push_back(coerce(inferred[k], inst[k], true, rule, args[k]->region));
    }
    return {std::move(out), std::move(*w)};
  }

  static unsigned next_index(const Env& gamma, const Env& omega, const Env& sigma) {
    IdentSet all;
    for (const Env* e : {&gamma, &omega, &sigma})
      for (const auto& [k, f] : *e) {
        all.insert(k);
        collect_all_idents(f, all);
      }
    unsigned m = 0;
    for (const auto& id : all) m = std::max(m, id.index);
    return m + 1;
  }

  SeqP command(const Env& gamma, const Env& omega, const OutSpec& spec, const Command& c,
               const SeqP& next) {
    Command r = c;
    const Region& reg = c.region;
    switch (c.kind) {
      case Command::Kind::Block: {
        const OutSpec& a = *c.spec;
        auto parts = omega.split(a.vars.keys());
        if (!parts)
          error("T.BLOCK", "block annotation names a variable that is not in scope", reg);
        r.body = seq(gamma, parts->first, a, c.body);
        fresh_existentials(a.exists, gamma, omega, spec, "T.BLOCK", reg);
        return seq_cmd(make(std::move(r)), seq(gamma, parts->second.concat(a.vars), spec, next));
      }

      case Command::Kind::Inc:
      case Command::Kind::Dec: {
        const bool inc = c.kind == Command::Kind::Inc;
        const Formula* cur = omega.find(c.name);
        if (!cur || cur->kind() != Formula::Kind::Nat)
          error(inc ? "T.INC" : "T.DEC",
                c.name.str() + (cur ? " does not have a nat type" : " is not a variable in scope"),
                reg, std::nullopt, cur ? std::optional<Formula>(*cur) : std::nullopt);
        r.type = *cur;
        const Term& t = cur->terms()[0];
        const Formula after = Formula::nat(inc ? Term::succ(t) : Term::pred(t));
        return seq_cmd(make(std::move(r)), seq(gamma, omega.updated(c.name, after), spec, next));
      }

      case Command::Kind::Assign: {
        if (!omega.contains(c.name))
          error("T.ASSIGN",
                c.name.str() + (gamma.contains(c.name)
                                    ? " is a constant and cannot be assigned"
                                    : " is not a variable in scope (missing from an enclosing annotation?)"),
                reg);
        r.expr = expr(gamma, omega, c.expr);
        r.type = r.expr->type;
        return seq_cmd(make(std::move(r)), seq(gamma, omega.updated(c.name, *r.type), spec, next));
      }

      case Command::Kind::For: {
        r.expr = expr(gamma, omega, c.expr);
        const Formula& bt = *r.expr->type;
        if (bt.kind() != Formula::Kind::Nat)
          error("T.FOR", "loop bound must have a nat type", c.expr->region, std::nullopt, bt);
        const Term n = bt.terms()[0];
        const OutSpec& a = *c.spec;
        if (!a.exists.empty())
          error("T.FOR", "loop annotations cannot bind existential variables", reg);
        Ident lid = c.name;
        Env sigma = a.vars;
        if (free_term_vars(gamma).count(lid)) {
          lid = Ident(c.name.name, next_index(gamma, omega, a.vars));
          sigma = subst_env(a.vars, {{c.name, Term::var(lid)}});
        }
        auto parts = omega.split(sigma.keys());
        if (!parts) error("T.FOR", "loop annotation names a variable that is not in scope", reg);
        const Env sigma0 = subst_env(sigma, {{lid, Term::zero()}});
        for (const auto& [k, f] : sigma0) {
          const Formula& got = *parts->first.find(k);
          if (!(got == f))
            error("T.FOR",
                  "at loop entry " + k.str() + " has type " + to_string(got) +
                      " but the invariant at 0 is " + to_string(f) + " (add a coercion with :>)",
                  reg, f, got);
        }
        const OutSpec step{{}, subst_env(sigma, {{lid, Term::succ(Term::var(lid))}})};
        r.logical = lid;
        r.spec = OutSpec{{}, sigma};
        r.body = seq(gamma.updated(c.name, Formula::nat(Term::var(lid))), sigma, step, c.body);
        return seq_cmd(make(std::move(r)),
                       seq(gamma, parts->second.concat(subst_env(sigma, {{lid, n}})), spec, next));
      }

      case Command::Kind::Call: {
        r.expr = expr(gamma, omega, c.expr);
        const Formula& ct = *r.expr->type;
        if (ct.kind() != Formula::Kind::Proc)
          error("T.CALL", "callee is not a procedure", c.expr->region, std::nullopt, ct);
        const ProcType& p = ct.proc();
        auto [args, w] = arguments(gamma, omega, p.in_vars, p.in_types, c.args, "T.CALL", reg);
        if (p.out_types.size() != c.outs.size())
          error("T.CALL",
                "expected " + std::to_string(p.out_types.size()) + " outputs, got " +
                    std::to_string(c.outs.size()),
                reg);
        auto parts = omega.split(c.outs);
        if (!parts) error("T.CALL", "call outputs must be distinct variables in scope", reg);
        fresh_existentials(p.out_vars, gamma, omega, spec, "T.CALL", reg);
        r.args = std::move(args);
        r.witness = w;
        r.out_types = subst_formulas(p.out_types, w);
        Env outs;
        for (std::size_t k = 0; k < c.outs.size(); ++k)
          outs = outs.updated(c.outs[k], (*r.out_types)[k]);
        return seq_cmd(make(std::move(r)), seq(gamma, parts->second.concat(outs), spec, next));
      }

      case Command::Kind::Label: {
        const OutSpec& a = *c.spec;
        auto parts = omega.split(a.vars.keys());
        if (!parts)
          error("T.LABEL", "label annotation names a variable that is not in scope", reg);
        r.body = seq(gamma.updated(c.name, label_type(a)), parts->first, a, c.body);
        return seq_cmd(make(std::move(r)), seq(gamma, parts->second.concat(a.vars), spec, next));
      }

      case Command::Kind::Jump: {
        r.expr = expr(gamma, omega, c.expr);
        const Formula& tt = *r.expr->type;
        if (tt.kind() != Formula::Kind::Proc || !tt.proc().out_vars.empty() ||
            tt.proc().out_types.size() != 1 ||
            tt.proc().out_types[0].kind() != Formula::Kind::Bot)
          error("T.JUMP", "jump target is not a continuation", c.expr->region, std::nullopt, tt);
        const ProcType& p = tt.proc();
        auto [args, w] = arguments(gamma, omega, p.in_vars, p.in_types, c.args, "T.JUMP", reg);
        const OutSpec& a = *c.spec;
        auto parts = omega.split(a.vars.keys());
        if (!parts) error("T.JUMP", "jump annotation names a variable that is not in scope", reg);
        r.args = std::move(args);
        r.witness = w;
        return seq_cmd(make(std::move(r)), seq(gamma, parts->second.concat(a.vars), spec, next));
      }
    }
    return next;
  }
};

}  // namespace

InferResult infer_program(const SeqP& src) {
  Inferer inf;
  InferResult r;
  r.proof = inf.seq(Env{}, Env{}, OutSpec{}, src);
  r.obligations = std::move(inf.obs);
  return r;
}

}  // namespace loopw
