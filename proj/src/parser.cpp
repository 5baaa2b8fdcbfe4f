#include "loopw/parser.hpp"

#include <charconv>

namespace loopw {

namespace {

class Parser {
public:
  Parser(std::string_view text, const std::string& file, bool proof)
      : toks_(lex(text, file)), proof_(proof) {}

  SeqP program() {
    SeqP s = sequence();
    if (!at_end()) fail("unexpected token", {"end of input"});
    return s;
  }

  ProofFile proof_file() {
    ProofFile pf;
    pf.body = sequence();
    while (peek().kind == Token::Kind::Number) pf.obligations.push_back(table_line());
    if (!at_end()) fail("unexpected token", {"obligation line", "end of input"});
    return pf;
  }

  Term whole_term() {
    Term t = term();
    if (!at_end()) fail("trailing input after term", {"end of input"});
    return t;
  }

  Formula whole_formula() {
    Formula f = formula();
    if (!at_end()) fail("trailing input after type", {"end of input"});
    return f;
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool proof_;

  // ---------------------------------------------------------------- tokens

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  Region here() const { return peek().region; }
  Region since(const Region& start) const {
    Region r = start;
    const Token& last = toks_[pos_ == 0 ? 0 : pos_ - 1];
    r.end_line = last.region.end_line;
    r.end_col = last.region.end_col;
    return r;
  }

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) const {
    std::string full = msg;
    const Token& t = peek();
    full += t.kind == Token::Kind::End ? " at end of input" : " near '" + t.text + "'";
    if (!expected.empty()) {
      full += "; expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) full += " or ";
        full += "'" + expected[i] + "'";
      }
    }
    throw ParseError(full, t.region, std::move(expected));
  }

  bool accept(std::string_view sym) {
    if (!peek().is(sym)) return false;
    take();
    return true;
  }
  void expect(std::string_view sym) {
    if (!accept(sym)) fail("syntax error", {std::string(sym)});
  }
  bool accept_word(std::string_view w) {
    if (!peek().word(w)) return false;
    take();
    return true;
  }
  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("syntax error", {std::string(w)});
  }
  Ident ident(const char* what = "identifier") {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident || (t.ident.index == 0 && is_keyword(t.ident.name)))
      fail("syntax error", {what});
    return take().ident;
  }
  std::uint64_t number() {
    const Token& t = peek();
    if (t.kind != Token::Kind::Number) fail("syntax error", {"number"});
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      fail("number does not fit in 64 bits");
    take();
    return v;
  }

  std::vector<Ident> ident_braces() {
    expect("{");
    std::vector<Ident> ids;
    if (!peek().is("}")) {
      do ids.push_back(ident()); while (accept(","));
    }
    expect("}");
    return ids;
  }

  // ----------------------------------------------------------------- terms

  Term term() {
    Term t = product();
    while (true) {
      if (accept("+"))
        t = Term::add(t, product());
      else if (accept("-"))
        t = Term::sub(t, product());
      else
        return t;
    }
  }

  Term product() {
    Term t = term_atom();
    while (accept("*")) t = Term::mul(t, term_atom());
    return t;
  }

  Term term_atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) {
      std::uint64_t q = number();
      if (q > kMaxTermNumeral) fail("numeral too large inside a term");
      return Term::numeral(q);
    }
    if (accept("(")) {
      Term inner = term();
      expect(")");
      return inner;
    }
    if (t.kind == Token::Kind::Ident && peek(1).is("(")) {
      if (t.word("s") || t.word("p")) {
        bool succ = t.word("s");
        take();
        take();
        Term a = term();
        expect(")");
        return succ ? Term::succ(a) : Term::pred(a);
      }
      Ident fn = ident("function symbol");
      take();
      std::vector<Term> args;
      do args.push_back(term()); while (accept(","));
      expect(")");
      return Term::app(fn, std::move(args));
    }
    if (t.kind == Token::Kind::Ident) return Term::var(ident("term"));
    fail("syntax error", {"term"});
  }

  // ----------------------------------------------------------------- types

  Formula formula() {
    if (accept("~")) return Formula::negation(formula());
    if (accept("$")) return Formula::bot();
    if (peek().word("nat") && peek(1).is("(")) {
      take();
      take();
      Term t = term();
      expect(")");
      return Formula::nat(t);
    }
    if (peek().word("proc")) {
      take();
      expect("(");
      ProcType p = prototype();
      expect(")");
      return Formula::proc(std::move(p));
    }
    if (accept("(")) {
      Term l = term();
      expect("=");
      Term r = term();
      expect(")");
      return Formula::equal(l, r);
    }
    if (peek().kind == Token::Kind::Ident && !peek(1).is("(")) return Formula::var(ident("type"));
    fail("syntax error", {"type"});
  }

  std::vector<Formula> formula_list(std::string_view stop) {
    std::vector<Formula> fs;
    if (peek().is(stop)) return fs;
    do fs.push_back(formula()); while (accept(","));
    return fs;
  }

  ProcType prototype() {
    ProcType p;
    if (peek().is("{")) p.in_vars = ident_braces();
    if (accept_word("in"))
      p.in_types = formula_list(";");
    else if (!p.in_vars.empty())
      fail("syntax error", {"in"});
    expect(";");
    if (peek().is("{")) p.out_vars = ident_braces();
    if (accept_word("out"))
      p.out_types = formula_list(")");
    else if (!p.out_vars.empty())
      fail("syntax error", {"out"});
    return p;
  }

  // `X : T, ...` up to (not including) `stop`.
  Env typed_list(std::string_view stop) {
    std::vector<std::pair<Ident, Formula>> es;
    if (!peek().is(stop)) {
      do {
        Ident x = ident("variable");
        expect(":");
        es.emplace_back(x, formula());
      } while (accept(","));
    }
    Env env;
    for (auto& [k, f] : es) {
      if (env.contains(k)) fail("duplicate variable " + k.str());
      env = env.updated(k, f);
    }
    return env;
  }

  // Annotation after `}` or `jump(...)`: `[{ids}] X:T, ...`
  OutSpec annotation() {
    OutSpec spec;
    if (peek().is("{")) spec.exists = ident_braces();
    std::vector<std::pair<Ident, Formula>> es;
    while (peek().kind == Token::Kind::Ident && peek(1).is(":") && !is_keyword(peek().text)) {
      Ident x = ident("variable");
      expect(":");
      Formula f = formula();
      if (spec.vars.contains(x)) fail("duplicate variable " + x.str() + " in annotation");
      spec.vars = spec.vars.updated(x, f);
      if (!accept(",")) break;
    }
    return spec;
  }

  Substitution witness() {
    Substitution s;
    expect("{");
    if (!peek().is("}")) {
      do {
        Ident k = ident("term variable");
        expect(":=");
        s.emplace_back(k, term());
      } while (accept(","));
    }
    expect("}");
    return s;
  }

  Obligation table_line() {
    Obligation ob;
    std::uint64_t id = number();
    if (id == 0 || id > 0xffffffffULL) fail("obligation number out of range");
    ob.id = static_cast<unsigned>(id);
    expect(":");
    expect("|-");
    Formula f = formula();
    if (f.kind() != Formula::Kind::Equal) fail("obligation must be an equality");
    ob.lhs = f.terms()[0];
    ob.rhs = f.terms()[1];
    return ob;
  }

  // ----------------------------------------------------------- expressions

  ExprP expr() {
    if (proof_) return annotated_expr();
    Region start = here();
    ExprP e = primary();
    while (accept(":>")) {
      Expr c;
      c.kind = Expr::Kind::Cast;
      c.inner = e;
      c.target = formula();
      c.region = since(start);
      e = make(std::move(c));
    }
    return e;
  }

  ExprP primary() {
    Region start = here();
    if (accept("(")) {
      ExprP e = expr();
      expect(")");
      return e;
    }
    Expr e = atom_core();
    e.region = since(start);
    return make(std::move(e));
  }

  // Number, star, identifier or procedure literal.
  Expr atom_core() {
    Expr e;
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) {
      e.kind = Expr::Kind::Num;
      e.num = number();
    } else if (accept("*")) {
      e.kind = Expr::Kind::Star;
      if (proof_ && accept("#")) {
        std::uint64_t n = number();
        if (n == 0 || n > 0xffffffffULL) fail("obligation number out of range");
        e.ob = static_cast<unsigned>(n);
      }
    } else if (t.word("proc")) {
      proc_literal(e);
    } else if (t.kind == Token::Kind::Ident) {
      e.kind = Expr::Kind::Id;
      e.id = ident("expression");
    } else {
      fail("syntax error", {"expression"});
    }
    return e;
  }

  void proc_literal(Expr& e) {
    e.kind = Expr::Kind::Proc;
    expect_word("proc");
    expect("(");
    if (peek().is("{")) e.in_vars = ident_braces();
    if (accept_word("in"))
      e.params = typed_list(";");
    else if (!e.in_vars.empty())
      fail("syntax error", {"in"});
    expect(";");
    if (peek().is("{")) e.out_vars = ident_braces();
    if (accept_word("out"))
      e.rets = typed_list(")");
    else if (!e.out_vars.empty())
      fail("syntax error", {"out"});
    expect(")");
    expect("{");
    e.body = sequence();
    expect("}");
  }

  // `(core : T)`
  ExprP annotated_expr() {
    Region start = here();
    if (!accept("(")) fail("missing annotation on expression", {"("});
    Expr e;
    if (peek().word("lemma") && peek(1).is("[")) {
      take();
      take();
      e.kind = Expr::Kind::Lemma;
      e.hyps = formula_list("]");
      expect("]");
      expect("|-");
      e.target = formula();
    } else if (peek().is("(")) {
      e.kind = Expr::Kind::Coerce;
      e.inner = annotated_expr();
      expect(":>");
      expect("[");
      e.target = formula();
      expect("]");
      expect_word("at");
      e.hole = ident("term variable");
      expect_word("by");
      e.justification = annotated_expr();
    } else {
      e = atom_core();
    }
    if (!accept(":")) fail("missing annotation on expression", {":"});
    e.type = formula();
    expect(")");
    e.region = since(start);
    return make(std::move(e));
  }

  // -------------------------------------------------------------- commands

  CommandP command() {
    Region start = here();
    Command c;
    const Token& t = peek();
    if (t.is("{")) {
      take();
      c.kind = Command::Kind::Block;
      c.body = sequence();
      expect("}");
      c.spec = annotation();
    } else if (t.word("for")) {
      take();
      c.kind = Command::Kind::For;
      c.name = ident("loop counter");
      if (proof_) {
        expect("[");
        c.logical = ident("logical index");
        expect("]");
      }
      expect(":=");
      if (peek().kind != Token::Kind::Number || peek().text != "0") fail("syntax error", {"0"});
      take();
      expect_word("until");
      c.expr = expr();
      expect("{");
      c.body = sequence();
      expect("}");
      c.spec = annotation();
    } else if (t.word("inc") || t.word("dec")) {
      c.kind = t.word("inc") ? Command::Kind::Inc : Command::Kind::Dec;
      take();
      expect("(");
      c.name = ident("variable");
      if (proof_) {
        if (!accept(":")) fail("missing annotation on variable", {":"});
        c.type = formula();
      }
      expect(")");
    } else if (t.word("jump")) {
      take();
      c.kind = Command::Kind::Jump;
      expect("(");
      c.expr = expr();
      while (accept(",")) c.args.push_back(expr());
      expect(")");
      if (proof_) {
        if (!accept_word("with")) fail("missing witness on jump", {"with"});
        c.witness = witness();
      }
      c.spec = annotation();
      if (!c.spec->exists.empty()) fail("jump annotations take no existential variables");
    } else if (t.kind == Token::Kind::Ident && peek(1).is(":") && peek(2).is("{")) {
      c.kind = Command::Kind::Label;
      c.name = ident("label");
      take();
      take();
      c.body = sequence();
      expect("}");
      c.spec = annotation();
    } else if (t.kind == Token::Kind::Ident && !proof_ && peek(1).is(":=")) {
      c.kind = Command::Kind::Assign;
      c.name = ident("variable");
      take();
      c.expr = expr();
    } else if (t.kind == Token::Kind::Ident && proof_ && peek(1).is(":")) {
      c.kind = Command::Kind::Assign;
      c.name = ident("variable");
      take();
      c.type = formula();
      expect(":=");
      c.expr = expr();
    } else if (t.kind == Token::Kind::Ident && proof_ && peek(1).is(":=")) {
      fail("missing annotation on assignment", {":"});
    } else {
      c.kind = Command::Kind::Call;
      c.expr = expr();
      expect("(");
      if (!peek().is(";")) {
        do c.args.push_back(expr()); while (accept(","));
      }
      expect(";");
      if (proof_) c.out_types.emplace();
      if (!peek().is(")")) {
        do {
          c.outs.push_back(ident("variable"));
          if (proof_) {
            if (!accept(":")) fail("missing annotation on call output", {":"});
            c.out_types->push_back(formula());
          }
        } while (accept(","));
      }
      expect(")");
      if (proof_) {
        if (!accept_word("with")) fail("missing witness on call", {"with"});
        c.witness = witness();
      }
    }
    c.region = since(start);
    return make(std::move(c));
  }

  // ------------------------------------------------------------- sequences

  bool at_sequence_end() const {
    return peek().is("}") || at_end() || (proof_ && peek().kind == Token::Kind::Number);
  }

  SeqP sequence() {
    Region start = here();
    Sequence s;
    if (proof_ && peek().word("with") && peek(1).is("{")) {
      take();
      s.kind = Sequence::Kind::Empty;
      s.witness = witness();
      accept(";");
      if (!at_sequence_end()) fail("sequence continues after its end", {"}"});
      s.region = since(start);
      return make(std::move(s));
    }
    if (at_sequence_end()) {
      if (proof_) fail("missing witness on sequence end", {"with"});
      s.kind = Sequence::Kind::Empty;
      s.region = start;
      return make(std::move(s));
    }
    if (proof_ && peek().word("subst") && peek(1).is("[")) {
      take();
      take();
      s.kind = Sequence::Kind::Subst;
      s.context = typed_list("]");
      expect("]");
      expect_word("at");
      s.hole = ident("term variable");
      expect_word("by");
      s.justification = expr();
      expect(";");
      s.region = since(start);
      s.next = sequence();
      return make(std::move(s));
    }
    if (peek().word("cst") || peek().word("var")) {
      bool cst = peek().word("cst");
      take();
      s.kind = cst ? Sequence::Kind::Cst : Sequence::Kind::Var;
      s.name = ident(cst ? "constant name" : "variable name");
      if (proof_) {
        if (!accept(":")) fail(std::string("missing annotation on ") + (cst ? "cst" : "var"), {":"});
        s.type = formula();
      }
      expect(cst ? "=" : ":=");
      s.value = expr();
      s.region = since(start);
      expect(";");
      s.next = sequence();
      return make(std::move(s));
    }
    CommandP c = command();
    if (!accept(";")) {
      if (proof_ || !at_sequence_end()) fail("syntax error", {";"});
    }
    return seq_cmd(std::move(c), sequence());
  }
};

}  // namespace

SeqP parse_program(std::string_view text, const std::string& file) {
  return Parser(text, file, false).program();
}

ProofFile parse_proof(std::string_view text, const std::string& file) {
  return Parser(text, file, true).proof_file();
}

Term parse_term(std::string_view text) { return Parser(text, "<term>", false).whole_term(); }

Formula parse_formula(std::string_view text) {
  return Parser(text, "<type>", false).whole_formula();
}

}  // namespace loopw
