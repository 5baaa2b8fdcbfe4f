#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "loopw/env.hpp"
#include "loopw/program.hpp"

namespace loopw {

struct Diagnostic {
  std::string rule;  // "T.BLOCK", "T.CALL", ..., "Lemma"
  std::string message;
  Region region;
  std::optional<Formula> expected;
  std::optional<Formula> actual;
  // Rules whose premise failed because of this one, innermost first.
  std::vector<std::string> enclosing;
};

// `formula_view` renders formulas in the logical syntax of the functional core.
std::string format_diagnostic(const Diagnostic& d, bool formula_view = false);

struct CheckOptions {
  bool collect_all = false;
  int verbosity = 1;
  std::ostream* trace = nullptr;  // rule trace at verbosity >= 2
};

struct CheckResult {
  bool ok = true;
  std::vector<Diagnostic> diagnostics;
};

CheckResult check_program(const SeqP& s, const OutSpec& spec = {}, const CheckOptions& opt = {});

CheckResult check_sequence(const Env& gamma, const Env& omega, const OutSpec& spec,
                           const SeqP& s, const CheckOptions& opt = {});

CheckResult check_exp(const Env& gamma, const Env& omega, const Formula& expected,
                      const ExprP& e, const CheckOptions& opt = {});

// Type of a label whose block produces `spec`.
Formula label_type(const OutSpec& spec);

}  // namespace loopw
