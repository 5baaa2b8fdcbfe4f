#include "loopw/syntax.hpp"

#include <algorithm>
#include <functional>

namespace loopw {

std::string Ident::str() const {
  if (index == 0) return name;
  return name + "'" + std::to_string(index);
}

// ---------------------------------------------------------------------------
// Term

Term Term::var(Ident id) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(id), {}}));
}
Term Term::zero() {
  static const Term z(std::make_shared<const Node>(Node{Kind::Zero, {}, {}}));
  return z;
}
Term Term::succ(Term t) {
  return Term(std::make_shared<const Node>(Node{Kind::Succ, {}, {std::move(t)}}));
}
Term Term::pred(Term t) {
  return Term(std::make_shared<const Node>(Node{Kind::Pred, {}, {std::move(t)}}));
}
Term Term::add(Term a, Term b) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Add, {}, {std::move(a), std::move(b)}}));
}
Term Term::mul(Term a, Term b) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Mul, {}, {std::move(a), std::move(b)}}));
}
Term Term::sub(Term a, Term b) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Sub, {}, {std::move(a), std::move(b)}}));
}
Term Term::app(Ident fn, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{Kind::App, std::move(fn), std::move(args)}));
}
Term Term::numeral(std::uint64_t q) {
  Term t = zero();
  for (std::uint64_t i = 0; i < q; ++i) t = succ(std::move(t));
  return t;
}

std::optional<std::uint64_t> Term::as_numeral() const {
  std::uint64_t q = 0;
  const Term* cur = this;
  while (cur->kind() == Kind::Succ) {
    ++q;
    cur = &cur->arg(0);
  }
  if (cur->kind() != Kind::Zero) return std::nullopt;
  return q;
}

bool operator==(const Term& a, const Term& b) {
  const Term* x = &a;
  const Term* y = &b;
  // Iterate down unary spines so deep numerals do not recurse.
  while (true) {
    if (x->node_ == y->node_) return true;
    if (x->kind() != y->kind() || x->ident() != y->ident() ||
        x->args().size() != y->args().size())
      return false;
    const auto n = x->args().size();
    if (n == 0) return true;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (!(x->arg(i) == y->arg(i))) return false;
    x = &x->arg(n - 1);
    y = &y->arg(n - 1);
  }
}

int compare_terms(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (a.ident() != b.ident()) return a.ident() < b.ident() ? -1 : 1;
  if (a.args().size() != b.args().size())
    return a.args().size() < b.args().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (int c = compare_terms(a.arg(i), b.arg(i)); c != 0) return c;
  return 0;
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::bot() {
  static const Formula b(std::make_shared<const Node>(Node{Kind::Bot, {}, {}, {}}));
  return b;
}
Formula Formula::equal(Term lhs, Term rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Equal, {std::move(lhs), std::move(rhs)}, {}, {}}));
}
Formula Formula::nat(Term t) {
  return Formula(std::make_shared<const Node>(Node{Kind::Nat, {std::move(t)}, {}, {}}));
}
Formula Formula::proc(ProcType p) {
  return Formula(std::make_shared<const Node>(Node{Kind::Proc, {}, std::move(p), {}}));
}
Formula Formula::var(Ident id) {
  return Formula(std::make_shared<const Node>(Node{Kind::Var, {}, {}, std::move(id)}));
}
Formula Formula::negation(Formula f) {
  return proc(ProcType{{}, {std::move(f)}, {}, {bot()}});
}
Formula Formula::top() { return equal(Term::zero(), Term::zero()); }

bool Formula::is_negation() const {
  if (kind() != Kind::Proc) return false;
  const auto& p = proc();
  return p.in_vars.empty() && p.in_types.size() == 1 && p.out_vars.empty() &&
         p.out_types.size() == 1 && p.out_types[0].kind() == Kind::Bot;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Bot:
      return true;
    case Formula::Kind::Var:
      return a.var_name() == b.var_name();
    case Formula::Kind::Equal:
    case Formula::Kind::Nat:
      return a.terms() == b.terms();
    case Formula::Kind::Proc: {
      const auto& p = a.proc();
      const auto& q = b.proc();
      return p.in_vars == q.in_vars && p.out_vars == q.out_vars &&
             p.in_types == q.in_types && p.out_types == q.out_types;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Free variables

void collect_free_vars(const Term& t, IdentSet& out) {
  if (t.kind() == Term::Kind::Var) {
    out.insert(t.ident());
    return;
  }
  for (const auto& a : t.args()) collect_free_vars(a, out);
}

IdentSet free_vars(const Term& t) {
  IdentSet s;
  collect_free_vars(t, s);
  return s;
}

bool occurs_free(const Ident& v, const Term& t) {
  if (t.kind() == Term::Kind::Var) return t.ident() == v;
  for (const auto& a : t.args())
    if (occurs_free(v, a)) return true;
  return false;
}

namespace {

void collect_formula_fv(const Formula& f, IdentSet& out) {
  switch (f.kind()) {
    case Formula::Kind::Bot:
    case Formula::Kind::Var:
      return;
    case Formula::Kind::Equal:
    case Formula::Kind::Nat:
      for (const auto& t : f.terms()) collect_free_vars(t, out);
      return;
    case Formula::Kind::Proc: {
      const auto& p = f.proc();
      IdentSet outs;
      for (const auto& g : p.out_types) collect_formula_fv(g, outs);
      for (const auto& j : p.out_vars) outs.erase(j);
      for (const auto& g : p.in_types) collect_formula_fv(g, outs);
      for (const auto& i : p.in_vars) outs.erase(i);
      out.insert(outs.begin(), outs.end());
      return;
    }
  }
}

}  // namespace

IdentSet free_term_vars(const Formula& f) {
  IdentSet s;
  collect_formula_fv(f, s);
  return s;
}

IdentSet free_term_vars(const std::vector<Formula>& fs) {
  IdentSet s;
  for (const auto& f : fs) collect_formula_fv(f, s);
  return s;
}

void collect_all_idents(const Term& t, IdentSet& out) {
  if (t.kind() == Term::Kind::Var || t.kind() == Term::Kind::App) out.insert(t.ident());
  for (const auto& a : t.args()) collect_all_idents(a, out);
}

void collect_all_idents(const Formula& f, IdentSet& out) {
  switch (f.kind()) {
    case Formula::Kind::Bot:
      return;
    case Formula::Kind::Var:
      out.insert(f.var_name());
      return;
    case Formula::Kind::Equal:
    case Formula::Kind::Nat:
      for (const auto& t : f.terms()) collect_all_idents(t, out);
      return;
    case Formula::Kind::Proc:
      for (const auto& i : f.proc().in_vars) out.insert(i);
      for (const auto& i : f.proc().out_vars) out.insert(i);
      for (const auto& g : f.proc().in_types) collect_all_idents(g, out);
      for (const auto& g : f.proc().out_types) collect_all_idents(g, out);
      return;
  }
}

// ---------------------------------------------------------------------------
// Substitution

const Term* subst_lookup(const Substitution& s, const Ident& v) {
  for (const auto& [k, t] : s)
    if (k == v) return &t;
  return nullptr;
}

std::vector<Ident> subst_keys(const Substitution& s) {
  std::vector<Ident> keys;
  keys.reserve(s.size());
  for (const auto& [k, _] : s) keys.push_back(k);
  return keys;
}

Term subst_term(const Term& t, const Substitution& s) {
  if (s.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::Var:
      if (const Term* r = subst_lookup(s, t.ident())) return *r;
      return t;
    case Term::Kind::Zero:
      return t;
    case Term::Kind::Succ:
      return Term::succ(subst_term(t.arg(0), s));
    case Term::Kind::Pred:
      return Term::pred(subst_term(t.arg(0), s));
    case Term::Kind::Add:
      return Term::add(subst_term(t.arg(0), s), subst_term(t.arg(1), s));
    case Term::Kind::Mul:
      return Term::mul(subst_term(t.arg(0), s), subst_term(t.arg(1), s));
    case Term::Kind::Sub:
      return Term::sub(subst_term(t.arg(0), s), subst_term(t.arg(1), s));
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(subst_term(a, s));
      return Term::app(t.ident(), std::move(args));
    }
  }
  return t;
}

Term subst_term(const Term& t, const Ident& v, const Term& by) {
  return subst_term(t, Substitution{{v, by}});
}

namespace {

struct Substituter {
  unsigned next_index;

  Ident fresh(const Ident& like) { return Ident(like.name, next_index++); }

  // Keep only the entries whose key is in `live`.
  static Substitution restrict(const Substitution& s, const IdentSet& live,
                               const std::vector<Ident>& bound) {
    Substitution r;
    for (const auto& e : s) {
      if (std::find(bound.begin(), bound.end(), e.first) != bound.end()) continue;
      if (live.count(e.first)) r.push_back(e);
    }
    return r;
  }

  static IdentSet range_fv(const Substitution& s) {
    IdentSet r;
    for (const auto& e : s) collect_free_vars(e.second, r);
    return r;
  }

  // Rename binders that would capture a free variable of the range.
  std::vector<Ident> rebind(const std::vector<Ident>& binders, Substitution& s) {
    const IdentSet danger = range_fv(s);
    std::vector<Ident> result;
    result.reserve(binders.size());
    for (const auto& b : binders) {
      if (danger.count(b)) {
        Ident nb = fresh(b);
        s.emplace_back(b, Term::var(nb));
        result.push_back(nb);
      } else {
        result.push_back(b);
      }
    }
    return result;
  }

  Formula apply(const Formula& f, const Substitution& s) {
    if (s.empty()) return f;
    switch (f.kind()) {
      case Formula::Kind::Bot:
      case Formula::Kind::Var:
        return f;
      case Formula::Kind::Equal:
        return Formula::equal(subst_term(f.terms()[0], s), subst_term(f.terms()[1], s));
      case Formula::Kind::Nat:
        return Formula::nat(subst_term(f.terms()[0], s));
      case Formula::Kind::Proc: {
        const auto& p = f.proc();
        IdentSet body_fv = free_term_vars(p.in_types);
        {
          IdentSet outs = free_term_vars(p.out_types);
          for (const auto& j : p.out_vars) outs.erase(j);
          body_fv.insert(outs.begin(), outs.end());
        }
        Substitution s1 = restrict(s, body_fv, p.in_vars);
        if (s1.empty()) return f;
        ProcType q;
        q.in_vars = rebind(p.in_vars, s1);
        for (const auto& g : p.in_types) q.in_types.push_back(apply(g, s1));
        Substitution s2 = restrict(s1, free_term_vars(p.out_types), p.out_vars);
        q.out_vars = rebind(p.out_vars, s2);
        for (const auto& g : p.out_types) q.out_types.push_back(apply(g, s2));
        return Formula::proc(std::move(q));
      }
    }
    return f;
  }
};

unsigned next_free_index(const Formula& f, const Substitution& s) {
  IdentSet all;
  collect_all_idents(f, all);
  for (const auto& [k, t] : s) {
    all.insert(k);
    collect_all_idents(t, all);
  }
  unsigned m = 0;
  for (const auto& id : all) m = std::max(m, id.index);
  return m + 1;
}

}  // namespace

Formula subst_formula_multi(const Formula& f, const Substitution& s) {
  if (s.empty()) return f;
  Substituter sub{next_free_index(f, s)};
  return sub.apply(f, s);
}

Formula subst_formula(const Formula& f, const Ident& v, const Term& by) {
  return subst_formula_multi(f, Substitution{{v, by}});
}

std::vector<Formula> subst_formulas(const std::vector<Formula>& fs,
                                    const Substitution& s) {
  std::vector<Formula> r;
  r.reserve(fs.size());
  for (const auto& f : fs) r.push_back(subst_formula_multi(f, s));
  return r;
}

// ---------------------------------------------------------------------------
// Alpha equality

namespace {

struct AlphaScope {
  std::vector<std::pair<Ident, int>> left, right;
  int next = 0;

  static int find(const std::vector<std::pair<Ident, int>>& st, const Ident& v) {
    for (auto it = st.rbegin(); it != st.rend(); ++it)
      if (it->first == v) return it->second;
    return -1;
  }

  bool terms(const Term& a, const Term& b) const {
    if (a.kind() != b.kind()) return false;
    if (a.kind() == Term::Kind::Var) {
      int x = find(left, a.ident());
      int y = find(right, b.ident());
      if (x < 0 && y < 0) return a.ident() == b.ident();
      return x == y;
    }
    if (a.ident() != b.ident() || a.args().size() != b.args().size()) return false;
    for (std::size_t i = 0; i < a.args().size(); ++i)
      if (!terms(a.arg(i), b.arg(i))) return false;
    return true;
  }

  bool formulas(const Formula& a, const Formula& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Formula::Kind::Bot:
        return true;
      case Formula::Kind::Var:
        return a.var_name() == b.var_name();
      case Formula::Kind::Equal:
      case Formula::Kind::Nat:
        for (std::size_t i = 0; i < a.terms().size(); ++i)
          if (!terms(a.terms()[i], b.terms()[i])) return false;
        return true;
      case Formula::Kind::Proc: {
        const auto& p = a.proc();
        const auto& q = b.proc();
        if (p.in_vars.size() != q.in_vars.size() ||
            p.out_vars.size() != q.out_vars.size() ||
            p.in_types.size() != q.in_types.size() ||
            p.out_types.size() != q.out_types.size())
          return false;
        const auto mark_l = left.size();
        const auto mark_r = right.size();
        for (std::size_t i = 0; i < p.in_vars.size(); ++i) {
          left.emplace_back(p.in_vars[i], next);
          right.emplace_back(q.in_vars[i], next++);
        }
        bool ok = true;
        for (std::size_t i = 0; ok && i < p.in_types.size(); ++i)
          ok = formulas(p.in_types[i], q.in_types[i]);
        for (std::size_t i = 0; ok && i < p.out_vars.size(); ++i) {
          left.emplace_back(p.out_vars[i], next);
          right.emplace_back(q.out_vars[i], next++);
        }
        for (std::size_t i = 0; ok && i < p.out_types.size(); ++i)
          ok = formulas(p.out_types[i], q.out_types[i]);
        left.resize(mark_l);
        right.resize(mark_r);
        return ok;
      }
    }
    return false;
  }
};

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  AlphaScope scope;
  return scope.formulas(a, b);
}

// ---------------------------------------------------------------------------
// Printing

std::string join_idents(const std::vector<Ident>& ids, const char* sep) {
  std::string r;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) r += sep;
    r += ids[i].str();
  }
  return r;
}

std::string to_string(const Term& t) {
  if (auto q = t.as_numeral()) return std::to_string(*q);
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.ident().str();
    case Term::Kind::Zero:
      return "0";
    case Term::Kind::Succ:
      return "s(" + to_string(t.arg(0)) + ")";
    case Term::Kind::Pred:
      return "p(" + to_string(t.arg(0)) + ")";
    case Term::Kind::Add:
      return "(" + to_string(t.arg(0)) + " + " + to_string(t.arg(1)) + ")";
    case Term::Kind::Mul:
      return "(" + to_string(t.arg(0)) + " * " + to_string(t.arg(1)) + ")";
    case Term::Kind::Sub:
      return "(" + to_string(t.arg(0)) + " - " + to_string(t.arg(1)) + ")";
    case Term::Kind::App: {
      std::string r = t.ident().str() + "(";
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) r += ",";
        r += to_string(t.arg(i));
      }
      return r + ")";
    }
  }
  return "?";
}

namespace {

std::string join_formulas(const std::vector<Formula>& fs) {
  std::string r;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) r += ", ";
    r += to_string(fs[i]);
  }
  return r;
}

std::string proto_half(const std::vector<Ident>& vars, const std::vector<Formula>& types,
                       const char* kw) {
  std::string r;
  if (!vars.empty()) r += "{" + join_idents(vars) + "} ";
  if (!vars.empty() || !types.empty()) {
    r += kw;
    if (!types.empty()) r += " " + join_formulas(types);
  }
  return r;
}

}  // namespace

std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Bot:
      return "$";
    case Formula::Kind::Var:
      return f.var_name().str();
    case Formula::Kind::Equal:
      return "(" + to_string(f.terms()[0]) + " = " + to_string(f.terms()[1]) + ")";
    case Formula::Kind::Nat:
      return "nat(" + to_string(f.terms()[0]) + ")";
    case Formula::Kind::Proc: {
      if (f.is_negation()) return "~" + to_string(f.proc().in_types[0]);
      const auto& p = f.proc();
      std::string r = "proc(" + proto_half(p.in_vars, p.in_types, "in") + ";";
      std::string out = proto_half(p.out_vars, p.out_types, "out");
      if (!out.empty()) r += " " + out;
      return r + ")";
    }
  }
  return "?";
}

std::string to_string(const Substitution& s) {
  std::string r = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) r += ", ";
    r += s[i].first.str() + " := " + to_string(s[i].second);
  }
  return r + "}";
}

}  // namespace loopw
