#pragma once

#include <string>
#include <string_view>

#include "loopw/lexer.hpp"
#include "loopw/program.hpp"

namespace loopw {

// Largest numeral accepted inside a term; terms encode numerals as s-towers.
inline constexpr std::uint64_t kMaxTermNumeral = 100000;

struct ProofFile {
  SeqP body;
  Obligations obligations;
};

// Partially annotated source (`.loop`).
SeqP parse_program(std::string_view text, const std::string& file = "<input>");

// Fully annotated derivation (`.proof`) followed by its obligation table.
ProofFile parse_proof(std::string_view text, const std::string& file = "<input>");

// Standalone pieces, mostly for tests and the CLI.
Term parse_term(std::string_view text);
Formula parse_formula(std::string_view text);

}  // namespace loopw
