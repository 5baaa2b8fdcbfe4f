#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "loopw/checker.hpp"
#include "loopw/obligations.hpp"
#include "loopw/parser.hpp"
#include "loopw/printer.hpp"

namespace loopw::testing {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string corpus_path(const std::string& name) {
  return std::string(LOOPW_CORPUS_DIR) + "/" + name + ".loop";
}

std::string corpus_source(const std::string& name) { return read_text(corpus_path(name)); }

InferResult infer_corpus(const std::string& name) {
  return infer_program(parse_program(corpus_source(name), name + ".loop"));
}

std::string corpus_proof(const std::string& name) {
  const InferResult r = infer_corpus(name);
  return print_proof(r.proof, r.obligations);
}

const char* const kMulSource = R"(cst p_mul = proc({x, y} in X:nat(x), Y:nat(y); out Z:nat(x * y)) {
    Z := 0 :> nat(x * 0);
    for i := 0 until Y {
        Z := Z :> nat(x * i + 0);
        for j := 0 until X {
            inc(Z);
        }Z:nat(x * i + j);
    }Z:nat(x * i);
};
)";

std::string check_outcome(const std::string& proof_text) {
  ProofFile pf;
  try {
    pf = parse_proof(proof_text, "mutant.proof");
  } catch (const ParseError&) {
    return "parse";
  }
  const CheckResult r = check_program(pf.body);
  if (r.ok) return "ok";
  return r.diagnostics.empty() ? "?" : r.diagnostics.front().rule;
}

const std::vector<Mutation>& mutations() {
  static const std::vector<Mutation> ms = {
      {"T.EMPTY", "add", "with {}\n\n1:", "with {x := 3}\n\n1:"},
      {"T.CST", "add", "cst p_add : proc({x, y} in nat(x), nat(y); out nat((x + y)))",
       "cst p_add : proc({x, y} in nat(x), nat(y); out nat((y + x)))"},
      {"T.VAR", "add", "var N : (0 = 0)", "var N : nat(0)"},
      {"T.BLOCK", "add", "inc(Z : nat((x + i)));",
       "{ inc(Z : nat((x + i))); with {} }W:nat(s((x + i)));"},
      {"T.INC", "add", "inc(Z : nat((x + i)))", "inc(Z : nat(x))"},
      {"T.DEC", "add", "inc(Z : nat((x + i)))", "dec(Z : nat(x))"},
      {"T.ASSIGN", "add", "Z : nat((x + 0)) :=", "Z : nat((x + 1)) :="},
      {"T.FOR", "add", "}Z:nat((x + i))", "}Z:nat((x + s(i)))"},
      {"T.CALL", "add", "with {x := 3, y := 5}", "with {x := 5, y := 3}"},
      {"T.SUBST-I", "add", "(x = (x + 0))) : nat", "(x = (x + 1))) : nat"},
      {"T.SUBST-II", "add", "(s((x + i)) = (x + s(i))));", "(s((x + i)) = (x + i)));"},
      {"T.LABEL", "negation", "    }Z:F;", "    }W:F;"},
      {"T.JUMP", "negation", "jump((K : ~~F), (K2 : ~F)) with {} Z:F;",
       "jump((K : ~~F), (K2 : ~F)) with {x := 0} Z:F;"},
      {"T.ENV", "add", "until (Y : nat(y))", "until (Y : nat(x))"},
      {"T.STAR", "add", "var N : (0 = 0) := (* : (0 = 0))", "var N : nat(0) := (* : nat(0))"},
      {"T.NUM", "add", "(3 : nat(3))", "(3 : nat(4))"},
      {"T.PROC", "add", "out nat((x + y)))", "out nat((y + x)))", true},
      {"Lemma", "add", "(* #1 : (x = (x + 0)))",
       "(lemma [nat(q)] |- (x = (x + 0)) : (x = (x + 0)))"},
  };
  return ms;
}

std::string mutate(const Mutation& m, const std::string& text) {
  std::string r = text;
  std::size_t pos = r.find(m.find);
  if (pos == std::string::npos) throw std::runtime_error("mutation site not found: " + m.find);
  while (pos != std::string::npos) {
    r.replace(pos, m.find.size(), m.replace);
    if (!m.all) break;
    pos = r.find(m.find, pos + m.replace.size());
  }
  return r;
}

const std::vector<FreshnessCase>& freshness_cases() {
  static const std::vector<FreshnessCase> cs = {
      {"t.proc", "T.PROC",
       R"(cst f : proc({x} in nat(x); out nat(x)) = (proc({x} in X : nat(x); out Z : nat(x)) {
    cst g : proc({x} in nat(x); out nat(x)) = (proc({x} in Y : nat(x); out W : nat(x)) {
        W : nat(x) := (Y : nat(x));
        with {}
    } : proc({x} in nat(x); out nat(x)));
    Z : nat(x) := (X : nat(x));
    with {}
} : proc({x} in nat(x); out nat(x)));
with {}
)",
       R"(cst f : proc({x} in nat(x); out nat(x)) = (proc({x} in X : nat(x); out Z : nat(x)) {
    cst g : proc({z} in nat(z); out nat(z)) = (proc({z} in Y : nat(z); out W : nat(z)) {
        W : nat(z) := (Y : nat(z));
        with {}
    } : proc({z} in nat(z); out nat(z)));
    Z : nat(x) := (X : nat(x));
    with {}
} : proc({x} in nat(x); out nat(x)));
with {}
)"},
      {"t.call", "T.CALL",
       R"(cst mk : proc(; {x} out nat(x)) = (proc(; {x} out M : nat(x)) {
    M : nat(0) := (0 : nat(0));
    with {x := 0}
} : proc(; {x} out nat(x)));
cst f : proc({x} in nat(x); out (0 = 0)) = (proc({x} in X : nat(x); out Z : (0 = 0)) {
    var R : (0 = 0) := (* : (0 = 0));
    (mk : proc(; {x} out nat(x)))(; R : nat(x)) with {};
    with {}
} : proc({x} in nat(x); out (0 = 0)));
with {}
)",
       R"(cst mk : proc(; {x} out nat(x)) = (proc(; {x} out M : nat(x)) {
    M : nat(0) := (0 : nat(0));
    with {x := 0}
} : proc(; {x} out nat(x)));
cst f : proc({y} in nat(y); out (0 = 0)) = (proc({y} in X : nat(y); out Z : (0 = 0)) {
    var R : (0 = 0) := (* : (0 = 0));
    (mk : proc(; {x} out nat(x)))(; R : nat(x)) with {};
    with {}
} : proc({y} in nat(y); out (0 = 0)));
with {}
)"},
      {"t.for", "T.FOR",
       R"(cst f : proc({i} in nat(i); out nat(i)) = (proc({i} in X : nat(i); out Z : nat(i)) {
    var V : (0 = 0) := (* : (0 = 0));
    for k [i] := 0 until (X : nat(i)) {
        with {}
    }V:(0 = 0);
    Z : nat(i) := (X : nat(i));
    with {}
} : proc({i} in nat(i); out nat(i)));
with {}
)",
       R"(cst f : proc({i} in nat(i); out nat(i)) = (proc({i} in X : nat(i); out Z : nat(i)) {
    var V : (0 = 0) := (* : (0 = 0));
    for k [j] := 0 until (X : nat(i)) {
        with {}
    }V:(0 = 0);
    Z : nat(i) := (X : nat(i));
    with {}
} : proc({i} in nat(i); out nat(i)));
with {}
)"},
  };
  return cs;
}

// ------------------------------------------------------------------ generators

namespace {

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

int roll(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

const std::vector<Ident> kTermVars = {"x", "y", "z", "i", "j"};
const std::vector<Ident> kProgVars = {"X", "Y", "Z", "W", "P", "Q"};
const std::vector<Ident> kLabels = {"K", "L"};
const std::vector<Ident> kCounters = {"k", "m"};

std::vector<Ident> some_of(Rng& rng, const std::vector<Ident>& pool, int max) {
  std::vector<Ident> r;
  const int n = roll(rng, max + 1);
  for (int i = 0; i < n; ++i) {
    const Ident& x = pick(rng, pool);
    if (std::find(r.begin(), r.end(), x) == r.end()) r.push_back(x);
  }
  return r;
}

Env random_env(Rng& rng, int depth, int min, int max) {
  Env e;
  const int n = min + roll(rng, max - min + 1);
  while (static_cast<int>(e.size()) < n) e = e.updated(pick(rng, kProgVars), random_formula(rng, depth));
  return e;
}

Substitution random_witness(Rng& rng) {
  Substitution w;
  for (const auto& x : some_of(rng, kTermVars, 2)) w.emplace_back(x, random_term(rng, 2));
  return w;
}

OutSpec random_spec(Rng& rng, int depth) {
  return OutSpec{some_of(rng, kTermVars, 1), random_env(rng, depth, 1, 2)};
}

ExprP random_expr(Rng& rng, int depth);

ExprP justification(Rng& rng) {
  Expr j;
  const Formula eq = Formula::equal(random_term(rng, 2), random_term(rng, 2));
  if (roll(rng, 3) == 0) {
    j.kind = Expr::Kind::Lemma;
    for (int i = roll(rng, 3); i > 0; --i) j.hyps.push_back(random_formula(rng, 1));
    j.target = eq;
  } else {
    j.kind = Expr::Kind::Star;
    if (roll(rng, 2)) j.ob = 1 + roll(rng, 5);
  }
  j.type = eq;
  return make(std::move(j));
}

ExprP random_expr(Rng& rng, int depth) {
  Expr e;
  const int k = depth > 0 ? roll(rng, 6) : roll(rng, 3);
  switch (k) {
    case 0:
      e.kind = Expr::Kind::Id;
      e.id = pick(rng, kProgVars);
      break;
    case 1:
      e.kind = Expr::Kind::Num;
      e.num = roll(rng, 10);
      break;
    case 2:
      e.kind = Expr::Kind::Star;
      if (roll(rng, 2)) e.ob = 1 + roll(rng, 5);
      break;
    case 3:
      e.kind = Expr::Kind::Coerce;
      e.inner = random_expr(rng, depth - 1);
      e.target = random_formula(rng, 1);
      e.hole = Ident("var", 1 + roll(rng, 4));
      e.justification = justification(rng);
      break;
    case 4:
      return justification(rng);
    default:
      e.kind = Expr::Kind::Proc;
      e.params = random_env(rng, 1, 0, 2);
      e.rets = random_env(rng, 1, 0, 2);
      if (!e.params.empty()) e.in_vars = some_of(rng, kTermVars, 2);
      if (!e.rets.empty()) e.out_vars = some_of(rng, kTermVars, 1);
      e.body = random_proof(rng, depth - 1);
      break;
  }
  e.type = random_formula(rng, 2);
  return make(std::move(e));
}

std::vector<ExprP> random_args(Rng& rng, int depth) {
  std::vector<ExprP> r;
  for (int i = roll(rng, 3); i > 0; --i) r.push_back(random_expr(rng, depth));
  return r;
}

CommandP random_command(Rng& rng, int depth) {
  Command c;
  const int k = depth > 0 ? roll(rng, 8) : 2 + roll(rng, 3);
  switch (k) {
    case 0:
      c.kind = Command::Kind::Block;
      c.body = random_proof(rng, depth - 1);
      c.spec = random_spec(rng, 1);
      break;
    case 1:
      c.kind = Command::Kind::For;
      c.name = pick(rng, kCounters);
      c.logical = pick(rng, kTermVars);
      c.expr = random_expr(rng, 0);
      c.body = random_proof(rng, depth - 1);
      c.spec = OutSpec{{}, random_env(rng, 1, 1, 2)};
      break;
    case 2:
      c.kind = Command::Kind::Assign;
      c.name = pick(rng, kProgVars);
      c.type = random_formula(rng, 2);
      c.expr = random_expr(rng, depth);
      break;
    case 3:
    case 4:
      c.kind = k == 3 ? Command::Kind::Inc : Command::Kind::Dec;
      c.name = pick(rng, kProgVars);
      c.type = Formula::nat(random_term(rng, 2));
      break;
    case 5: {
      c.kind = Command::Kind::Call;
      c.expr = random_expr(rng, 0);
      c.args = random_args(rng, depth - 1);
      c.outs = some_of(rng, kProgVars, 2);
      if (c.outs.empty()) c.outs.push_back(pick(rng, kProgVars));
      std::vector<Formula> ts;
      for (std::size_t i = 0; i < c.outs.size(); ++i) ts.push_back(random_formula(rng, 1));
      c.out_types = ts;
      c.witness = random_witness(rng);
      break;
    }
    case 6:
      c.kind = Command::Kind::Label;
      c.name = pick(rng, kLabels);
      c.body = random_proof(rng, depth - 1);
      c.spec = random_spec(rng, 1);
      break;
    default:
      c.kind = Command::Kind::Jump;
      c.expr = random_expr(rng, 0);
      c.args = random_args(rng, depth - 1);
      c.witness = random_witness(rng);
      c.spec = OutSpec{{}, random_env(rng, 1, 1, 2)};
      break;
  }
  return make(std::move(c));
}

}  // namespace

Term random_term(Rng& rng, int depth, bool with_apps) {
  if (depth <= 0 || roll(rng, 4) == 0) {
    switch (roll(rng, 3)) {
      case 0:
        return Term::zero();
      case 1:
        return Term::numeral(roll(rng, 5));
      default:
        return Term::var(pick(rng, kTermVars));
    }
  }
  switch (roll(rng, with_apps ? 6 : 5)) {
    case 0:
      return Term::succ(random_term(rng, depth - 1, with_apps));
    case 1:
      return Term::pred(random_term(rng, depth - 1, with_apps));
    case 2:
      return Term::add(random_term(rng, depth - 1, with_apps), random_term(rng, depth - 1, with_apps));
    case 3:
      return Term::mul(random_term(rng, depth - 1, with_apps), random_term(rng, depth - 1, with_apps));
    case 4:
      return Term::sub(random_term(rng, depth - 1, with_apps), random_term(rng, depth - 1, with_apps));
    default: {
      std::vector<Term> args;
      for (int i = 1 + roll(rng, 2); i > 0; --i) args.push_back(random_term(rng, depth - 1, with_apps));
      return Term::app(roll(rng, 2) ? Ident("a") : Ident("F32"), std::move(args));
    }
  }
}

Formula random_formula(Rng& rng, int depth) {
  const int k = depth > 0 ? roll(rng, 6) : roll(rng, 4);
  switch (k) {
    case 0:
      return Formula::bot();
    case 1:
      return Formula::equal(random_term(rng, 2), random_term(rng, 2));
    case 2:
      return Formula::nat(random_term(rng, 2));
    case 3:
      return Formula::var(roll(rng, 2) ? Ident("A") : Ident("F"));
    case 4:
      return Formula::negation(random_formula(rng, depth - 1));
    default: {
      ProcType p;
      for (int i = roll(rng, 3); i > 0; --i) p.in_types.push_back(random_formula(rng, depth - 1));
      for (int i = roll(rng, 3); i > 0; --i) p.out_types.push_back(random_formula(rng, depth - 1));
      if (!p.in_types.empty()) p.in_vars = some_of(rng, kTermVars, 2);
      if (!p.out_types.empty()) p.out_vars = some_of(rng, kTermVars, 1);
      return Formula::proc(std::move(p));
    }
  }
}

SeqP random_proof(Rng& rng, int depth) {
  const int n = roll(rng, 4);
  std::vector<int> kinds;
  for (int i = 0; i < n; ++i) kinds.push_back(roll(rng, 6));
  SeqP s = empty_seq(random_witness(rng));
  for (auto it = kinds.rbegin(); it != kinds.rend(); ++it) {
    Sequence q;
    switch (*it) {
      case 0:
      case 1:
        q.kind = *it == 0 ? Sequence::Kind::Cst : Sequence::Kind::Var;
        q.name = pick(rng, kProgVars);
        q.type = random_formula(rng, 2);
        q.value = random_expr(rng, depth);
        break;
      case 2:
        q.kind = Sequence::Kind::Subst;
        q.context = random_env(rng, 1, 1, 2);
        q.hole = Ident("var", 1 + roll(rng, 4));
        q.justification = justification(rng);
        break;
      default:
        q.kind = Sequence::Kind::Seq;
        q.cmd = random_command(rng, depth);
        break;
    }
    q.next = s;
    s = make(std::move(q));
  }
  return s;
}

// ------------------------------------------------------------------ properties

namespace {

void record(PropertyResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (ok) return;
  if (r.failures++ == 0) r.first_failure = what;
}

bool subset(const IdentSet& a, const IdentSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::map<Ident, std::uint64_t> random_assignment(Rng& rng, const IdentSet& vars, int max) {
  std::map<Ident, std::uint64_t> env;
  for (const auto& v : vars) env[v] = roll(rng, max + 1);
  return env;
}

FTermP fnode(FTerm t) { return std::make_shared<const FTerm>(std::move(t)); }

}  // namespace

PropertyResult prop_substitution(std::uint64_t seed, std::size_t n) {
  PropertyResult r{"substitution identities"};
  Rng rng(seed);
  const Ident x("x"), y("y");
  for (std::size_t k = 0; k < n; ++k) {
    const Term t = random_term(rng, 4);
    const Term u = random_term(rng, 3);
    const Term v = random_term(rng, 3);
    record(r, subst_term(t, x, Term::var(x)) == t, "t[x/x] = t on " + to_string(t));
    if (!occurs_free(x, t)) record(r, subst_term(t, x, u) == t, "vacuous substitution on " + to_string(t));
    const Term seq = subst_term(subst_term(t, x, u), y, v);
    const Term sim = subst_term(t, Substitution{{x, subst_term(u, y, v)}, {y, v}});
    record(r, seq == sim, "composition on " + to_string(t));

    const Formula f = random_formula(rng, 3);
    record(r, alpha_equal(subst_formula(f, x, Term::var(x)), f), "F[x/x] = F on " + to_string(f));
    IdentSet bound = free_term_vars(f);
    const bool had_x = bound.erase(x) > 0;
    if (had_x) {
      const IdentSet fu = free_vars(u);
      bound.insert(fu.begin(), fu.end());
    }
    record(r, subset(free_term_vars(subst_formula(f, x, u)), bound),
           "free variables of " + to_string(f) + " [" + to_string(u) + "/x]");
  }
  return r;
}

PropertyResult prop_env_split(std::uint64_t seed, std::size_t n) {
  PropertyResult r{"env split permutation law"};
  Rng rng(seed);
  for (std::size_t k = 0; k < n; ++k) {
    const Env e = random_env(rng, 1, 0, 5);
    std::vector<Ident> dom;
    for (const auto& key : e.keys())
      if (roll(rng, 2)) dom.push_back(key);
    std::vector<Ident> perm = dom;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto a = e.split(dom);
    const auto b = e.split(perm);
    const bool ok = a && b && a->first == b->first && a->second == b->second &&
                    a->first.concat(a->second).same_bindings(e) &&
                    a->first.size() == dom.size();
    record(r, ok, "split of " + std::to_string(e.size()) + " entries");
    if (!dom.empty()) {
      std::vector<Ident> dup = dom;
      dup.push_back(dom.front());
      record(r, !e.split(dup).has_value(), "split with a repeated key");
    }
    std::vector<Ident> missing = dom;
    missing.push_back(Ident("absent"));
    record(r, !e.split(missing).has_value(), "split with a missing key");
  }
  return r;
}

PropertyResult prop_normalize_idempotent(std::uint64_t seed, std::size_t n) {
  PropertyResult r{"normalize idempotence"};
  Rng rng(seed);
  for (std::size_t k = 0; k < n; ++k) {
    const Term t = random_term(rng, 5);
    const Term once = normalize(t);
    record(r, normalize(once) == once, "normalize twice on " + to_string(t));
  }
  return r;
}

PropertyResult prop_proven_sound(std::uint64_t seed, std::size_t assignments) {
  PropertyResult r{"proven obligations hold"};
  Rng rng(seed);
  Obligations proven;
  auto consider = [&](const Term& l, const Term& rhs) {
    Obligation ob{static_cast<unsigned>(proven.size() + 1), l, rhs};
    if (discharge(ob) == Discharge::Proven) proven.push_back(ob);
  };
  for (const auto& ob : infer_corpus("add").obligations) consider(ob.lhs, ob.rhs);
  for (const auto& ob : infer_program(parse_program(kMulSource, "mul.loop")).obligations)
    consider(ob.lhs, ob.rhs);
  for (int k = 0; k < 400; ++k) {
    const Term a = random_term(rng, 3, false);
    const Term b = random_term(rng, 3, false);
    consider(Term::add(a, b), Term::add(b, a));
    consider(Term::mul(a, Term::succ(b)), Term::add(Term::mul(a, b), a));
    consider(a, normalize(a));
    consider(a, b);
  }
  if (proven.empty()) return r;
  for (std::size_t k = 0; k < assignments; ++k) {
    const Obligation& ob = pick(rng, proven);
    IdentSet vars = free_vars(ob.lhs);
    const IdentSet rv = free_vars(ob.rhs);
    vars.insert(rv.begin(), rv.end());
    const auto env = random_assignment(rng, vars, 20);
    const auto lv = eval_ground(ob.lhs, env);
    const auto rvv = eval_ground(ob.rhs, env);
    record(r, lv && rvv && *lv == *rvv, to_string(ob.lhs) + " = " + to_string(ob.rhs));
  }
  return r;
}

PropertyResult prop_rec_vs_loop(std::uint64_t max_n) {
  PropertyResult r{"Rec agrees with iteration"};
  const SeqP add = infer_corpus("add").proof;
  const SeqP mul = infer_program(parse_program(kMulSource, "mul.loop")).proof;
  const Ident i("i"), acc("acc");
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    const std::uint64_t a = (n * 7) % 13;
    const std::string at = " at n = " + std::to_string(n);
    try {
      const FValueP s = feval(translate_run(add, Ident("p_add"), {a, n}));
      record(r, s->kind == FValue::Kind::Num && s->num == a + n, "addition" + at);
      const FValueP p = feval(translate_run(mul, Ident("p_mul"), {n % 9, n}));
      record(r, p->kind == FValue::Kind::Num && p->num == (n % 9) * n, "multiplication" + at);

      // Rec(n, 0, fn i => fn acc => Succ(Succ(acc)))
      FTerm body{.kind = FTerm::Kind::Succ};
      FTerm inner{.kind = FTerm::Kind::Succ};
      inner.kids = {fnode(FTerm{.kind = FTerm::Kind::Var, .name = acc})};
      body.kids = {fnode(std::move(inner))};
      FTerm lam_acc{.kind = FTerm::Kind::Lam};
      lam_acc.params = {{acc, FFormula::truth()}};
      lam_acc.kids = {fnode(std::move(body))};
      FTerm lam_i{.kind = FTerm::Kind::Lam};
      lam_i.binders = {i};
      lam_i.params = {{i, FFormula::nat(Term::var(i))}};
      lam_i.kids = {fnode(std::move(lam_acc))};
      FTerm rec{.kind = FTerm::Kind::Rec};
      rec.binders = {i};
      rec.kids = {fnode(FTerm{.kind = FTerm::Kind::NumLit, .num = n}),
                  fnode(FTerm{.kind = FTerm::Kind::NumLit, .num = 0}), fnode(std::move(lam_i))};
      std::uint64_t loop = 0;
      for (std::uint64_t k = 0; k < n; ++k) loop += 2;
      const FValueP d = feval(fnode(std::move(rec)));
      record(r, d->kind == FValue::Kind::Num && d->num == loop, "doubling" + at);
    } catch (const std::exception& e) {
      record(r, false, std::string(e.what()) + at);
    }
  }
  return r;
}

PropertyResult prop_roundtrip(std::uint64_t seed, std::size_t random_programs) {
  PropertyResult r{"parse/print roundtrip"};
  for (const auto& name : kCorpus) {
    try {
      const SeqP src = parse_program(corpus_source(name), name);
      record(r, same(parse_program(print_source(src), name), src), name + " source");
      const InferResult inf = infer_program(src);
      const std::string text = print_proof(inf.proof, inf.obligations);
      const ProofFile pf = parse_proof(text, name);
      record(r, same(pf.body, inf.proof) && print_proof(pf.body, pf.obligations) == text,
             name + " proof");
    } catch (const std::exception& e) {
      record(r, false, name + ": " + e.what());
    }
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < random_programs; ++k) {
    const SeqP s = random_proof(rng, 3);
    Obligations obs;
    for (int q = roll(rng, 3); q > 0; --q)
      obs.push_back(Obligation{static_cast<unsigned>(obs.size() + 1), random_term(rng, 3),
                               random_term(rng, 3)});
    const std::string text = print_proof(s, obs);
    try {
      const ProofFile pf = parse_proof(text, "random.proof");
      bool ok = same(pf.body, s) && pf.obligations.size() == obs.size();
      for (std::size_t q = 0; ok && q < obs.size(); ++q)
        ok = pf.obligations[q].id == obs[q].id && pf.obligations[q].lhs == obs[q].lhs &&
             pf.obligations[q].rhs == obs[q].rhs;
      record(r, ok, "random program:\n" + text);
    } catch (const std::exception& e) {
      record(r, false, std::string(e.what()) + " in random program:\n" + text);
    }
  }
  return r;
}

}  // namespace loopw::testing
