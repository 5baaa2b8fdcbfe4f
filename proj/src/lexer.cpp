#include "loopw/lexer.hpp"

#include <array>
#include <cctype>

namespace loopw {

namespace {

constexpr std::array<std::string_view, 10> kKeywords = {
    "cst", "var", "proc", "in", "out", "for", "until", "inc", "dec", "jump"};

constexpr std::array<std::string_view, 3> kTwoCharSymbols = {":=", ":>", "|-"};
constexpr std::string_view kOneCharSymbols = ":;,(){}[]~$*+-=#";

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

bool is_keyword(std::string_view w) {
  for (auto k : kKeywords)
    if (k == w) return true;
  return false;
}

std::vector<Token> lex(std::string_view text, const std::string& file) {
  std::vector<Token> out;
  std::size_t pos = 0;
  int line = 1, col = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  };

  while (true) {
    Token tok;
    std::size_t start = pos;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance(1);
    tok.trivia = std::string(text.substr(start, pos - start));
    tok.region.file = file;
    tok.region.line = line;
    tok.region.col = col;

    if (pos >= text.size()) {
      tok.kind = Token::Kind::End;
      tok.region.end_line = line;
      tok.region.end_col = col;
      out.push_back(std::move(tok));
      return out;
    }

    start = pos;
    char c = text[pos];
    if (ident_start(c)) {
      std::size_t n = 0;
      while (pos + n < text.size() && ident_char(text[pos + n])) ++n;
      tok.ident.name = std::string(text.substr(pos, n));
      if (pos + n + 1 < text.size() && text[pos + n] == '\'' && digit(text[pos + n + 1])) {
        std::size_t m = n + 1;
        while (pos + m < text.size() && digit(text[pos + m])) ++m;
        std::string digits(text.substr(pos + n + 1, m - n - 1));
        unsigned long v = 0;
        try {
          v = std::stoul(digits);
        } catch (const std::exception&) {
          throw ParseError("identifier index out of range", tok.region);
        }
        if (v == 0 || v > 0xffffffffUL)
          throw ParseError("identifier index must be positive", tok.region);
        tok.ident.index = static_cast<unsigned>(v);
        n = m;
      }
      tok.kind = Token::Kind::Ident;
      advance(n);
    } else if (digit(c)) {
      std::size_t n = 0;
      while (pos + n < text.size() && digit(text[pos + n])) ++n;
      tok.kind = Token::Kind::Number;
      advance(n);
    } else {
      std::size_t n = 0;
      for (auto s : kTwoCharSymbols)
        if (text.substr(pos, 2) == s) n = 2;
      if (n == 0 && kOneCharSymbols.find(c) != std::string_view::npos) n = 1;
      if (n == 0) {
        Region r = tok.region;
        r.end_line = line;
        r.end_col = col + 1;
        throw ParseError(std::string("unexpected character '") + c + "'", r);
      }
      tok.kind = Token::Kind::Symbol;
      advance(n);
    }
    tok.text = std::string(text.substr(start, pos - start));
    tok.region.end_line = line;
    tok.region.end_col = col;
    out.push_back(std::move(tok));
  }
}

}  // namespace loopw
