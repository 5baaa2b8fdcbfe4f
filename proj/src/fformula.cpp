#include <algorithm>

#include "loopw/functional.hpp"

namespace loopw {

FFormula FFormula::bot() { return FFormula(std::make_shared<const Node>(Node{Kind::Bot, {}, {}, {}, {}})); }

FFormula FFormula::equal(Term lhs, Term rhs) {
  return FFormula(std::make_shared<const Node>(
      Node{Kind::Equal, {std::move(lhs), std::move(rhs)}, {}, {}, {}}));
}

FFormula FFormula::nat(Term t) {
  return FFormula(std::make_shared<const Node>(Node{Kind::Nat, {std::move(t)}, {}, {}, {}}));
}

FFormula FFormula::conj(std::vector<FFormula> parts) {
  return FFormula(std::make_shared<const Node>(Node{Kind::And, {}, std::move(parts), {}, {}}));
}

FFormula FFormula::impl(FFormula a, FFormula b) {
  return FFormula(
      std::make_shared<const Node>(Node{Kind::Impl, {}, {std::move(a), std::move(b)}, {}, {}}));
}

FFormula FFormula::forall(std::vector<Ident> vars, FFormula body) {
  if (vars.empty()) return body;
  return FFormula(std::make_shared<const Node>(
      Node{Kind::Forall, {}, {std::move(body)}, std::move(vars), {}}));
}

FFormula FFormula::exists(std::vector<Ident> vars, FFormula body) {
  if (vars.empty()) return body;
  return FFormula(std::make_shared<const Node>(
      Node{Kind::Exists, {}, {std::move(body)}, std::move(vars), {}}));
}

FFormula FFormula::var(Ident id) {
  return FFormula(std::make_shared<const Node>(Node{Kind::Var, {}, {}, {}, std::move(id)}));
}

FFormula FFormula::truth() { return conj({}); }

bool operator==(const FFormula& a, const FFormula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.terms() == b.terms() && a.parts() == b.parts() &&
         a.binders() == b.binders() && a.var_name() == b.var_name();
}

FFormula and_of(std::vector<FFormula> parts) {
  if (parts.size() == 1) return parts[0];
  return FFormula::conj(std::move(parts));
}

FFormula arrow(std::vector<Ident> binders, std::vector<FFormula> params, FFormula result) {
  if (params.empty()) return FFormula::forall(std::move(binders), std::move(result));
  return FFormula::forall(std::move(binders),
                          FFormula::impl(and_of(std::move(params)), std::move(result)));
}

namespace {

void collect_free(const FFormula& f, IdentSet& out) {
  switch (f.kind()) {
    case FFormula::Kind::Bot:
    case FFormula::Kind::Var:
      return;
    case FFormula::Kind::Equal:
    case FFormula::Kind::Nat:
      for (const auto& t : f.terms()) collect_free_vars(t, out);
      return;
    case FFormula::Kind::And:
    case FFormula::Kind::Impl:
      for (const auto& p : f.parts()) collect_free(p, out);
      return;
    case FFormula::Kind::Forall:
    case FFormula::Kind::Exists: {
      IdentSet inner;
      collect_free(f.parts()[0], inner);
      for (const auto& b : f.binders()) inner.erase(b);
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

void collect_idents(const FFormula& f, IdentSet& out) {
  for (const auto& t : f.terms()) collect_all_idents(t, out);
  for (const auto& p : f.parts()) collect_idents(p, out);
  out.insert(f.binders().begin(), f.binders().end());
}

struct FSubst {
  unsigned next;

  FFormula apply(const FFormula& f, const Substitution& s) {
    if (s.empty()) return f;
    switch (f.kind()) {
      case FFormula::Kind::Bot:
      case FFormula::Kind::Var:
        return f;
      case FFormula::Kind::Equal:
        return FFormula::equal(subst_term(f.terms()[0], s), subst_term(f.terms()[1], s));
      case FFormula::Kind::Nat:
        return FFormula::nat(subst_term(f.terms()[0], s));
      case FFormula::Kind::And: {
        std::vector<FFormula> ps;
        for (const auto& p : f.parts()) ps.push_back(apply(p, s));
        return FFormula::conj(std::move(ps));
      }
      case FFormula::Kind::Impl:
        return FFormula::impl(apply(f.parts()[0], s), apply(f.parts()[1], s));
      case FFormula::Kind::Forall:
      case FFormula::Kind::Exists: {
        IdentSet body_fv;
        collect_free(f.parts()[0], body_fv);
        Substitution live;
        for (const auto& e : s) {
          if (std::find(f.binders().begin(), f.binders().end(), e.first) != f.binders().end())
            continue;
          if (body_fv.count(e.first)) live.push_back(e);
        }
        if (live.empty()) return f;
        IdentSet danger;
        for (const auto& e : live) collect_free_vars(e.second, danger);
        std::vector<Ident> bs;
        for (const auto& b : f.binders()) {
          if (danger.count(b)) {
            Ident nb(b.name, next++);
            live.emplace_back(b, Term::var(nb));
            bs.push_back(nb);
          } else {
            bs.push_back(b);
          }
        }
        FFormula body = apply(f.parts()[0], live);
        return f.kind() == FFormula::Kind::Forall ? FFormula::forall(std::move(bs), body)
                                                  : FFormula::exists(std::move(bs), body);
      }
    }
    return f;
  }
};

struct FAlpha {
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

  bool formulas(const FFormula& a, const FFormula& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case FFormula::Kind::Bot:
        return true;
      case FFormula::Kind::Var:
        return a.var_name() == b.var_name();
      case FFormula::Kind::Equal:
      case FFormula::Kind::Nat:
        for (std::size_t i = 0; i < a.terms().size(); ++i)
          if (!terms(a.terms()[i], b.terms()[i])) return false;
        return true;
      case FFormula::Kind::And:
      case FFormula::Kind::Impl:
        if (a.parts().size() != b.parts().size()) return false;
        for (std::size_t i = 0; i < a.parts().size(); ++i)
          if (!formulas(a.parts()[i], b.parts()[i])) return false;
        return true;
      case FFormula::Kind::Forall:
      case FFormula::Kind::Exists: {
        if (a.binders().size() != b.binders().size()) return false;
        const std::size_t l = left.size(), r = right.size();
        for (std::size_t i = 0; i < a.binders().size(); ++i) {
          left.emplace_back(a.binders()[i], next);
          right.emplace_back(b.binders()[i], next);
          ++next;
        }
        bool ok = formulas(a.parts()[0], b.parts()[0]);
        left.resize(l);
        right.resize(r);
        return ok;
      }
    }
    return false;
  }
};

}  // namespace

IdentSet free_term_vars(const FFormula& f) {
  IdentSet r;
  collect_free(f, r);
  return r;
}

FFormula subst_fformula(const FFormula& f, const Substitution& s) {
  if (s.empty()) return f;
  IdentSet all;
  collect_idents(f, all);
  for (const auto& e : s) {
    all.insert(e.first);
    collect_all_idents(e.second, all);
  }
  unsigned next = 1;
  for (const auto& id : all) next = std::max(next, id.index + 1);
  FSubst sub{next};
  return sub.apply(f, s);
}

bool alpha_equal(const FFormula& a, const FFormula& b) {
  FAlpha al;
  return al.formulas(a, b);
}

std::string to_string(const FFormula& f) {
  switch (f.kind()) {
    case FFormula::Kind::Bot:
      return "False";
    case FFormula::Kind::Equal:
      return to_string(Formula::equal(f.terms()[0], f.terms()[1]));
    case FFormula::Kind::Nat:
      return "nat(" + to_string(f.terms()[0]) + ")";
    case FFormula::Kind::And: {
      if (f.parts().empty()) return "True";
      std::string r = "(";
      for (std::size_t i = 0; i < f.parts().size(); ++i) {
        if (i) r += " & ";
        r += to_string(f.parts()[i]);
      }
      return r + ")";
    }
    case FFormula::Kind::Impl:
      return "(" + to_string(f.parts()[0]) + " => " + to_string(f.parts()[1]) + ")";
    case FFormula::Kind::Forall:
    case FFormula::Kind::Exists:
      return std::string(f.kind() == FFormula::Kind::Forall ? "Forall " : "Exists ") +
             join_idents(f.binders(), ",") + "." + to_string(f.parts()[0]);
    case FFormula::Kind::Var:
      return f.var_name().str();
  }
  return "?";
}

FFormula translate_formula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Bot:
      return FFormula::bot();
    case Formula::Kind::Equal:
      return FFormula::equal(f.terms()[0], f.terms()[1]);
    case Formula::Kind::Nat:
      return FFormula::nat(f.terms()[0]);
    case Formula::Kind::Var:
      return FFormula::var(f.var_name());
    case Formula::Kind::Proc: {
      const auto& p = f.proc();
      std::vector<FFormula> ins, outs;
      for (const auto& t : p.in_types) ins.push_back(translate_formula(t));
      for (const auto& t : p.out_types) outs.push_back(translate_formula(t));
      return arrow(p.in_vars, std::move(ins), FFormula::exists(p.out_vars, and_of(std::move(outs))));
    }
  }
  return FFormula::bot();
}

}  // namespace loopw
