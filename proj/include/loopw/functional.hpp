#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopw/env.hpp"
#include "loopw/program.hpp"

namespace loopw {

// Logic of the functional core: minimal first-order natural deduction over
// arithmetic terms.
class FFormula {
public:
  enum class Kind { Bot, Equal, Nat, And, Impl, Forall, Exists, Var };

  static FFormula bot();
  static FFormula equal(Term lhs, Term rhs);
  static FFormula nat(Term t);
  /// Raw conjunction; see and_of for the collapsing form.
  static FFormula conj(std::vector<FFormula> parts);
  static FFormula impl(FFormula a, FFormula b);
  /// Empty binder lists yield `body` itself.
  static FFormula forall(std::vector<Ident> vars, FFormula body);
  static FFormula exists(std::vector<Ident> vars, FFormula body);
  static FFormula var(Ident id);
  /// Empty conjunction.
  static FFormula truth();

  Kind kind() const { return node_->kind; }
  const std::vector<Term>& terms() const { return node_->terms; }
  /// And: the conjuncts; Impl: antecedent, consequent; Forall/Exists: body.
  const std::vector<FFormula>& parts() const { return node_->parts; }
  const std::vector<Ident>& binders() const { return node_->binders; }
  const Ident& var_name() const { return node_->id; }

  friend bool operator==(const FFormula& a, const FFormula& b);

private:
  struct Node {
    Kind kind;
    std::vector<Term> terms;
    std::vector<FFormula> parts;
    std::vector<Ident> binders;
    Ident id;
  };
  explicit FFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using FEnv = BasicEnv<FFormula>;

/// Singleton conjunctions collapse to their element.
FFormula and_of(std::vector<FFormula> parts);
/// forall(binders, params => result); no implication when params is empty.
FFormula arrow(std::vector<Ident> binders, std::vector<FFormula> params, FFormula result);

bool alpha_equal(const FFormula& a, const FFormula& b);
FFormula subst_fformula(const FFormula& f, const Substitution& s);
IdentSet free_term_vars(const FFormula& f);
std::string to_string(const FFormula& f);

FFormula translate_formula(const Formula& f);

// Annotated terms. Every node carries the formula it proves.
struct FTerm;
using FTermP = std::shared_ptr<const FTerm>;

struct FTerm {
  enum class Kind {
    Var, Unit, Tuple, Proj, Lam, App, Let, Zero, Succ, Pred, NumLit, Rec,
    Coerce, Pack, Unpack, Callcc, Throw, Abort, Lemma
  };
  Kind kind = Kind::Unit;
  FFormula type = FFormula::truth();

  Ident name;                   // Var, Callcc continuation
  std::vector<Ident> names;     // Let/Unpack value binders
  std::vector<Ident> binders;   // Lam/Unpack term binders; Rec: {index}; Callcc: label existentials
  std::vector<std::pair<Ident, FFormula>> params;  // Lam
  std::vector<FTermP> kids;
  std::size_t index = 0;        // Proj
  std::uint64_t num = 0;        // NumLit
  std::vector<Term> inst;       // App/Throw: instance of the callee's binders
  Substitution witness;         // Pack
  Ident hole;                   // Coerce
  FFormula context = FFormula::truth();  // Coerce context; Rec motive; Callcc continuation type
  std::optional<unsigned> ob;   // Unit standing for an obligation
  std::vector<FFormula> hyps;   // Lemma
};

// Children by kind:
//   Tuple: elements          Proj: {t}           Lam: {body}
//   App/Throw: {f, args...}  Let/Unpack: {bound, body}
//   Succ/Pred/Abort/Pack: {t}  Rec: {n, base, step}
//   Coerce: {t, justification}  Callcc: {body}

/// Program variables free in a term.
IdentSet free_program_vars(const FTermP& t);

struct TranslateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FTermP translate_program(const SeqP& s, const OutSpec& spec = {});

// Program wrapped for evaluation. Without an entry the result is the tuple
// of top-level variables; with one, the entry constant is applied to the
// numerals in `args` (non-numeric parameters receive the top-level
// continuation) and the non-continuation outputs are returned.
FTermP translate_run(const SeqP& s, const std::optional<Ident>& entry = std::nullopt,
                     const std::vector<std::uint64_t>& args = {});

struct FDiagnostic {
  std::string rule;  // "F.VAR", "F.APP", ...
  std::string message;
};

std::optional<FDiagnostic> fcheck(const FTermP& t, const FFormula& expected,
                                  const FEnv& hyps = {});

// Runtime values.
struct FValue;
using FValueP = std::shared_ptr<const FValue>;

struct EvalError : std::runtime_error {
  enum class Kind { Stuck, OutOfFuel };
  Kind kind;
  EvalError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct FValue {
  enum class Kind { Num, Unit, Tuple, Closure, Cont };
  Kind kind = Kind::Unit;
  std::uint64_t num = 0;
  std::vector<FValueP> elems;
  std::shared_ptr<const void> env;    // Closure
  FTermP lam;                         // Closure
  std::shared_ptr<const void> cont;   // Cont
};

constexpr std::uint64_t kDefaultFuel = 10'000'000;

FValueP feval(const FTermP& t, std::uint64_t fuel = kDefaultFuel);
std::string to_string(const FValue& v);

// SML-like rendering; `erase` drops type comments. Obligations are appended
// as trailing comments.
std::string fprint(const FTermP& t, bool erase, const Obligations& obs = {});

// Compact s-expression of the erased term structure.
std::string fshape(const FTermP& t);

}  // namespace loopw
