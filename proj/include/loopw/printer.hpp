#pragma once

#include <string>
#include <vector>

#include "loopw/program.hpp"

namespace loopw {

// Concrete `.loop` syntax; annotations produced by inference are dropped,
// coercions print as `e :> T`.
std::string print_source(const SeqP& s);

// No type information at all (`.cs` / `.pcs`).
std::string print_erased(const SeqP& s);

// Fully annotated `.proof` text with its obligation table.
std::string print_proof(const SeqP& s, const Obligations& obs);

std::string print_witness(const Substitution& w);
std::string print_obligation(const Obligation& ob);

// Two-column derivation view (`.typ`). `report` lines are appended after the
// obligation table; `formula_view` shows types as formulas.
std::string print_typ_view(const SeqP& s, const Obligations& obs,
                           const std::vector<std::string>& report = {},
                           bool formula_view = false);

}  // namespace loopw
