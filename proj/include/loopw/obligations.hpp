#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopw/program.hpp"

namespace loopw {

// Normal form under x+0=x, x+s(y)=s(x+y), x*0=0, x*s(y)=x*y+x, p(0)=0,
// p(s(x))=x, x-0=x, 0-x=0, s(x)-s(y)=x-y, with + flattened and its summands
// sorted. Result shape: s^k(a1 + ... + an), or a numeral.
Term normalize(const Term& t);

enum class Discharge { Proven, Unknown };

Discharge discharge(const Obligation& ob);

// One line per obligation: "N: proven" / "N: unknown".
std::vector<std::string> discharge_report(const Obligations& obs);

// SMT-LIB v2 script; one push/pop block per obligation, each expected unsat.
std::string export_smtlib(const Obligations& obs);

// Value of a term over naturals with p(0)=0 and truncated subtraction;
// nullopt for unassigned variables, function symbols or overflow.
std::optional<std::uint64_t> eval_ground(const Term& t,
                                         const std::map<Ident, std::uint64_t>& env = {});

}  // namespace loopw
