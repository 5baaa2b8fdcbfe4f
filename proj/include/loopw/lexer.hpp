#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "loopw/program.hpp"

namespace loopw {

struct ParseError : std::runtime_error {
  Region region;
  std::vector<std::string> expected;
  ParseError(const std::string& msg, Region r, std::vector<std::string> exp = {})
      : std::runtime_error(msg), region(std::move(r)), expected(std::move(exp)) {}
};

struct Token {
  enum class Kind { Ident, Number, Symbol, End };
  Kind kind = Kind::End;
  std::string text;     // exact source spelling
  std::string trivia;   // whitespace preceding the token
  Region region;
  Ident ident;          // Ident tokens: decoded name and index

  bool is(std::string_view sym) const {
    return kind == Kind::Symbol && text == sym;
  }
  // Plain identifier spelling (a freshened name never matches a keyword).
  bool word(std::string_view w) const {
    return kind == Kind::Ident && ident.index == 0 && ident.name == w;
  }
};

// The last token is always End and carries trailing trivia, so concatenating
// trivia + text over all tokens reproduces the input.
std::vector<Token> lex(std::string_view text, const std::string& file = "<input>");

bool is_keyword(std::string_view w);

}  // namespace loopw
