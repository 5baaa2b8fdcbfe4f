#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace loopw {

/// An identifier. Source identifiers have `index == 0`; identifiers created
/// by freshening carry a positive index and render as `name'index`, which
/// the lexer accepts but no source identifier can spell by accident.
struct Ident {
  std::string name;
  unsigned index = 0;

  Ident() = default;
  Ident(std::string n, unsigned i = 0) : name(std::move(n)), index(i) {}
  Ident(const char* n) : name(n) {}

  std::string str() const;

  friend bool operator==(const Ident&, const Ident&) = default;
  friend std::strong_ordering operator<=>(const Ident&, const Ident&) = default;
};

using IdentSet = std::set<Ident>;

/// First-order arithmetic term. Immutable; copies share structure.
class Term {
public:
  enum class Kind { Var, Zero, Succ, Pred, Add, Mul, Sub, App };

  static Term var(Ident id);
  static Term zero();
  static Term succ(Term t);
  static Term pred(Term t);
  static Term add(Term a, Term b);
  static Term mul(Term a, Term b);
  static Term sub(Term a, Term b);
  static Term app(Ident fn, std::vector<Term> args);
  /// s^q(0)
  static Term numeral(std::uint64_t q);

  Kind kind() const { return node_->kind; }
  /// Variable name, or the function symbol of an application.
  const Ident& ident() const { return node_->id; }
  const std::vector<Term>& args() const { return node_->args; }
  const Term& arg(std::size_t i) const { return node_->args[i]; }

  /// q when the term is exactly s^q(0).
  std::optional<std::uint64_t> as_numeral() const;

  friend bool operator==(const Term& a, const Term& b);

private:
  struct Node {
    Kind kind;
    Ident id;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Ordered simultaneous substitution `[t1/i1, ..., tn/in]`.
using Substitution = std::vector<std::pair<Ident, Term>>;

class Formula;

struct ProcType {
  std::vector<Ident> in_vars;
  std::vector<Formula> in_types;
  std::vector<Ident> out_vars;
  std::vector<Formula> out_types;
};

/// Imperative type `T`: `$`, `(t = t)`, `nat(t)`, procedure prototypes and
/// type variables. Negation `~T` is `proc(in T; out $)`.
class Formula {
public:
  enum class Kind { Bot, Equal, Nat, Proc, Var };

  static Formula bot();
  static Formula equal(Term lhs, Term rhs);
  static Formula nat(Term t);
  static Formula proc(ProcType p);
  static Formula var(Ident id);
  static Formula negation(Formula f);
  /// Placeholder type of uninitialised out parameters, `(0 = 0)`.
  static Formula top();

  Kind kind() const { return node_->kind; }
  /// Terms of an Equal (two) or Nat (one) formula.
  const std::vector<Term>& terms() const { return node_->terms; }
  const ProcType& proc() const { return node_->proc; }
  const Ident& var_name() const { return node_->id; }

  /// Matches exactly `proc(in T; out $)`.
  bool is_negation() const;

  friend bool operator==(const Formula& a, const Formula& b);

private:
  struct Node {
    Kind kind;
    std::vector<Term> terms;
    ProcType proc;
    Ident id;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Free variables.
void collect_free_vars(const Term& t, IdentSet& out);
IdentSet free_vars(const Term& t);
IdentSet free_term_vars(const Formula& f);
IdentSet free_term_vars(const std::vector<Formula>& fs);
bool occurs_free(const Ident& v, const Term& t);
/// Every identifier mentioned anywhere (free, bound, function symbols).
void collect_all_idents(const Term& t, IdentSet& out);
void collect_all_idents(const Formula& f, IdentSet& out);

// Substitution.
Term subst_term(const Term& t, const Substitution& s);
Term subst_term(const Term& t, const Ident& v, const Term& by);
/// Capture-avoiding; bound variables that would capture a free variable of
/// the substituted terms are renamed to a fresh index of the same name.
Formula subst_formula(const Formula& f, const Ident& v, const Term& by);
Formula subst_formula_multi(const Formula& f, const Substitution& s);
std::vector<Formula> subst_formulas(const std::vector<Formula>& fs,
                                    const Substitution& s);

/// Equality modulo renaming of procedure-bound term variables.
bool alpha_equal(const Formula& a, const Formula& b);

/// Lookup in a substitution.
const Term* subst_lookup(const Substitution& s, const Ident& v);
std::vector<Ident> subst_keys(const Substitution& s);

// Rendering in the concrete syntax: binary operators fully parenthesised,
// closed numerals as decimals.
std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::string to_string(const Substitution& s);
std::string join_idents(const std::vector<Ident>& ids, const char* sep = ", ");

/// Total order used for canonical forms (structural, deterministic).
int compare_terms(const Term& a, const Term& b);

}  // namespace loopw
