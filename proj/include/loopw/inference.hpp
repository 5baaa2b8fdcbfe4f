#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "loopw/checker.hpp"
#include "loopw/program.hpp"

namespace loopw {

struct InferError : std::runtime_error {
  Diagnostic diag;
  explicit InferError(Diagnostic d) : std::runtime_error(d.message), diag(std::move(d)) {}
};

struct InferResult {
  SeqP proof;
  Obligations obligations;
};

// Throws InferError (or ParseError-free input is assumed).
InferResult infer_program(const SeqP& src);

// A term position where two same-shaped formulas differ.
struct SlotDiff {
  std::size_t slot;  // preorder index of the term position
  Term have;
  Term want;
};

// Term-slot differences between formulas of the same skeleton; nullopt when
// the skeletons differ or a differing term mentions a procedure binder.
std::optional<std::vector<SlotDiff>> reconcile(const Formula& have, const Formula& want);

// First-order matching of `binders` in `patterns` against `actuals`. Shape
// mismatches are skipped; inconsistent or missing bindings fail.
std::optional<Substitution> solve_witness(const std::vector<Ident>& binders,
                                          const std::vector<Formula>& patterns,
                                          const std::vector<Formula>& actuals);

// Term positions directly under Equal/Nat, in preorder.
std::size_t count_slots(const Formula& f);
Formula replace_slot(const Formula& f, std::size_t slot, const Term& t);

}  // namespace loopw
