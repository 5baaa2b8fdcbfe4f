#include "loopw/obligations.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace loopw {

namespace {

// s^k(sum of atoms); atoms kept sorted.
struct Normal {
  std::uint64_t k = 0;
  std::vector<Term> atoms;

  bool is_zero() const { return k == 0 && atoms.empty(); }
};

std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
  if (a > UINT64_MAX - b) throw std::overflow_error("numeral overflow during normalization");
  return a + b;
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw std::overflow_error("numeral overflow during normalization");
  return a * b;
}

void sort_atoms(std::vector<Term>& atoms) {
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Term& a, const Term& b) { return compare_terms(a, b) < 0; });
}

Term to_term(const Normal& n) {
  if (n.atoms.empty()) return Term::numeral(n.k);
  Term t = n.atoms[0];
  for (std::size_t i = 1; i < n.atoms.size(); ++i) t = Term::add(t, n.atoms[i]);
  for (std::uint64_t i = 0; i < n.k; ++i) t = Term::succ(t);
  return t;
}

Normal atom(Term t) {
  Normal n;
  n.atoms.push_back(std::move(t));
  return n;
}

Normal sum(const Normal& a, const Normal& b) {
  Normal r;
  r.k = add_checked(a.k, b.k);
  r.atoms = a.atoms;
  r.atoms.insert(r.atoms.end(), b.atoms.begin(), b.atoms.end());
  sort_atoms(r.atoms);
  return r;
}

Normal norm(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return atom(t);
    case Term::Kind::Zero:
      return {};
    case Term::Kind::Succ: {
      // Iterate so that long numerals do not recurse.
      std::uint64_t k = 0;
      const Term* cur = &t;
      while (cur->kind() == Term::Kind::Succ) {
        ++k;
        cur = &cur->arg(0);
      }
      Normal n = norm(*cur);
      n.k = add_checked(n.k, k);
      return n;
    }
    case Term::Kind::Pred: {
      Normal n = norm(t.arg(0));
      if (n.k > 0) {
        --n.k;
        return n;
      }
      if (n.atoms.empty()) return {};
      return atom(Term::pred(to_term(n)));
    }
    case Term::Kind::Add:
      return sum(norm(t.arg(0)), norm(t.arg(1)));
    case Term::Kind::Mul: {
      Normal a = norm(t.arg(0));
      Normal b = norm(t.arg(1));
      // a * s^k(B) = a * B + k.a
      Normal r;
      r.k = mul_checked(a.k, b.k);
      for (std::uint64_t i = 0; i < b.k; ++i)
        r.atoms.insert(r.atoms.end(), a.atoms.begin(), a.atoms.end());
      if (!b.atoms.empty()) {
        Normal rest{0, b.atoms};
        r.atoms.push_back(Term::mul(to_term(a), to_term(rest)));
      }
      sort_atoms(r.atoms);
      return r;
    }
    case Term::Kind::Sub: {
      Normal a = norm(t.arg(0));
      Normal b = norm(t.arg(1));
      const std::uint64_t c = std::min(a.k, b.k);
      a.k -= c;
      b.k -= c;
      if (b.is_zero()) return a;
      if (a.is_zero()) return {};
      return atom(Term::sub(to_term(a), to_term(b)));
    }
    case Term::Kind::App: {
      std::vector<Term> args;
      for (const auto& x : t.args()) args.push_back(to_term(norm(x)));
      return atom(Term::app(t.ident(), std::move(args)));
    }
  }
  return {};
}

// SMT-LIB simple symbols; everything else is quoted.
std::string smt_symbol(const std::string& s) {
  bool simple = !s.empty() && !std::isdigit(static_cast<unsigned char>(s[0]));
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') simple = false;
  return simple ? s : "|" + s + "|";
}

std::string smt_function(const Ident& f) {
  static const std::set<std::string> reserved = {"s", "p", "monus", "not", "and", "or",
                                                 "ite", "true", "false", "let", "abs", "div", "mod"};
  std::string name = f.str();
  if (reserved.count(name)) name = "f_" + name;
  return smt_symbol(name);
}

std::string smt_var(const Ident& v) { return smt_symbol("v_" + v.str()); }

std::string smt_term(const Term& t) {
  if (auto q = t.as_numeral()) return std::to_string(*q);
  switch (t.kind()) {
    case Term::Kind::Var:
      return smt_var(t.ident());
    case Term::Kind::Zero:
      return "0";
    case Term::Kind::Succ:
      return "(s " + smt_term(t.arg(0)) + ")";
    case Term::Kind::Pred:
      return "(p " + smt_term(t.arg(0)) + ")";
    case Term::Kind::Add:
      return "(+ " + smt_term(t.arg(0)) + " " + smt_term(t.arg(1)) + ")";
    case Term::Kind::Mul:
      return "(* " + smt_term(t.arg(0)) + " " + smt_term(t.arg(1)) + ")";
    case Term::Kind::Sub:
      return "(monus " + smt_term(t.arg(0)) + " " + smt_term(t.arg(1)) + ")";
    case Term::Kind::App: {
      std::string r = "(" + smt_function(t.ident());
      for (const auto& a : t.args()) r += " " + smt_term(a);
      return r + ")";
    }
  }
  return "0";
}

void collect_functions(const Term& t, std::map<Ident, std::size_t>& out) {
  if (t.kind() == Term::Kind::App) out.emplace(t.ident(), t.args().size());
  for (const auto& a : t.args()) collect_functions(a, out);
}

}  // namespace

Term normalize(const Term& t) { return to_term(norm(t)); }

Discharge discharge(const Obligation& ob) {
  try {
    return normalize(ob.lhs) == normalize(ob.rhs) ? Discharge::Proven : Discharge::Unknown;
  } catch (const std::overflow_error&) {
    return Discharge::Unknown;
  }
}

std::vector<std::string> discharge_report(const Obligations& obs) {
  std::vector<std::string> r;
  for (const auto& ob : obs)
    r.push_back(std::to_string(ob.id) + ": " +
                (discharge(ob) == Discharge::Proven ? "proven" : "unknown"));
  return r;
}

std::string export_smtlib(const Obligations& obs) {
  std::string r;
  r += "; proof obligations, each goal expected unsat\n";
  r += "(set-logic UFNIA)\n";
  r += "(define-fun s ((x Int)) Int (+ x 1))\n";
  r += "(define-fun p ((x Int)) Int (ite (> x 0) (- x 1) 0))\n";
  r += "(define-fun monus ((x Int) (y Int)) Int (ite (>= x y) (- x y) 0))\n";
  std::map<Ident, std::size_t> fns;
  for (const auto& ob : obs) {
    collect_functions(ob.lhs, fns);
    collect_functions(ob.rhs, fns);
  }
  for (const auto& [f, n] : fns) {
    r += "(declare-fun " + smt_function(f) + " (";
    for (std::size_t i = 0; i < n; ++i) r += i ? " Int" : "Int";
    r += ") Int)\n";
  }
  for (const auto& ob : obs) {
    r += "(push 1)\n";
    for (const auto& v : ob.free_vars()) {
      r += "(declare-const " + smt_var(v) + " Int)\n";
      r += "(assert (>= " + smt_var(v) + " 0))\n";
    }
    r += "(assert (! (not (= " + smt_term(ob.lhs) + " " + smt_term(ob.rhs) + ")) :named ob" +
         std::to_string(ob.id) + "))\n";
    r += "(check-sat)\n";
    r += "(pop 1)\n";
  }
  return r;
}

std::optional<std::uint64_t> eval_ground(const Term& t,
                                         const std::map<Ident, std::uint64_t>& env) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = env.find(t.ident());
      if (it == env.end()) return std::nullopt;
      return it->second;
    }
    case Term::Kind::Zero:
      return 0;
    case Term::Kind::Succ: {
      std::uint64_t k = 0;
      const Term* cur = &t;
      while (cur->kind() == Term::Kind::Succ) {
        ++k;
        cur = &cur->arg(0);
      }
      auto v = eval_ground(*cur, env);
      if (!v || *v > UINT64_MAX - k) return std::nullopt;
      return *v + k;
    }
    case Term::Kind::Pred: {
      auto v = eval_ground(t.arg(0), env);
      if (!v) return std::nullopt;
      return *v == 0 ? 0 : *v - 1;
    }
    case Term::Kind::Add:
    case Term::Kind::Mul:
    case Term::Kind::Sub: {
      auto a = eval_ground(t.arg(0), env);
      auto b = eval_ground(t.arg(1), env);
      if (!a || !b) return std::nullopt;
      if (t.kind() == Term::Kind::Add) {
        if (*a > UINT64_MAX - *b) return std::nullopt;
        return *a + *b;
      }
      if (t.kind() == Term::Kind::Mul) {
        if (*a != 0 && *b > UINT64_MAX / *a) return std::nullopt;
        return *a * *b;
      }
      return *a >= *b ? *a - *b : 0;
    }
    case Term::Kind::App:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace loopw
