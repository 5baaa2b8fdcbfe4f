#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loopw/env.hpp"
#include "loopw/syntax.hpp"

namespace loopw {

struct Region {
  std::string file;
  int line = 0, col = 0;
  int end_line = 0, end_col = 0;
};

struct Expr;
struct Command;
struct Sequence;
using ExprP = std::shared_ptr<const Expr>;
using CommandP = std::shared_ptr<const Command>;
using SeqP = std::shared_ptr<const Sequence>;

// Existential term variables and the typed variables a sequence produces.
struct OutSpec {
  std::vector<Ident> exists;
  Env vars;
};

struct Expr {
  enum class Kind { Id, Num, Star, Proc, Cast, Coerce, Lemma };
  Kind kind = Kind::Star;
  Region region;
  std::optional<Formula> type;

  Ident id;                  // Id
  std::uint64_t num = 0;     // Num
  std::optional<unsigned> ob;  // Star: obligation it stands for

  // Proc
  std::vector<Ident> in_vars;
  Env params;
  std::vector<Ident> out_vars;
  Env rets;
  SeqP body;

  // Cast (source `e :> T`, target in `target`) and Coerce (t.subst-i)
  ExprP inner;
  std::optional<Formula> target;  // Cast target; Coerce context
  Ident hole;
  ExprP justification;

  // Lemma
  std::vector<Formula> hyps;
};

struct Command {
  enum class Kind { Block, For, Assign, Inc, Dec, Call, Label, Jump };
  Kind kind = Kind::Block;
  Region region;

  Ident name;                    // counter, assigned variable or label
  std::optional<Ident> logical;  // For: logical index
  std::optional<Formula> type;   // Assign/Inc/Dec: type of the variable
  ExprP expr;                    // loop bound, assigned value, callee, jump target
  std::vector<ExprP> args;
  std::vector<Ident> outs;
  std::optional<std::vector<Formula>> out_types;
  std::optional<Substitution> witness;
  SeqP body;
  std::optional<OutSpec> spec;
};

struct Sequence {
  enum class Kind { Empty, Seq, Cst, Var, Subst };
  Kind kind = Kind::Empty;
  Region region;

  std::optional<Substitution> witness;  // Empty
  CommandP cmd;                         // Seq
  Ident name;                           // Cst/Var
  std::optional<Formula> type;          // Cst/Var declared type
  ExprP value;                          // Cst/Var
  SeqP next;                            // Seq/Cst/Var tail; Subst inner
  Env context;                          // Subst
  Ident hole;                           // Subst
  ExprP justification;                  // Subst
};

struct Obligation {
  unsigned id = 0;
  Term lhs = Term::zero();
  Term rhs = Term::zero();
  std::vector<Ident> free_vars() const;
};

using Obligations = std::vector<Obligation>;

inline ExprP make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }
inline CommandP make(Command c) { return std::make_shared<const Command>(std::move(c)); }
inline SeqP make(Sequence s) { return std::make_shared<const Sequence>(std::move(s)); }

SeqP empty_seq(std::optional<Substitution> witness = std::nullopt);
SeqP seq_cmd(CommandP c, SeqP next);

// Structural equality, regions ignored.
bool same(const Expr& a, const Expr& b);
bool same(const Command& a, const Command& b);
bool same(const Sequence& a, const Sequence& b);
bool same(const OutSpec& a, const OutSpec& b);
bool same(const ExprP& a, const ExprP& b);
bool same(const SeqP& a, const SeqP& b);

// Region → "file:line:col"
std::string where(const Region& r);

}  // namespace loopw
