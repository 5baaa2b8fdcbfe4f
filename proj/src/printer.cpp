#include "loopw/printer.hpp"

namespace loopw {

namespace {

enum class Mode { Source, Erased, Proof };

const char* kIndent = "    ";

std::string typed_entries(const Env& env, const char* colon) {
  std::string r;
  bool first = true;
  for (const auto& [k, f] : env) {
    if (!first) r += ", ";
    first = false;
    r += k.str() + colon + to_string(f);
  }
  return r;
}

class Printer {
public:
  explicit Printer(Mode m) : mode_(m) {}

  std::string seq(const SeqP& s, const std::string& ind) {
    std::string out;
    const Sequence* cur = s.get();
    while (cur) {
      switch (cur->kind) {
        case Sequence::Kind::Empty:
          if (mode_ == Mode::Proof)
            out += ind + "with " + print_witness(cur->witness.value_or(Substitution{})) + "\n";
          return out;
        case Sequence::Kind::Seq:
          out += ind + cmd(*cur->cmd, ind) + ";\n";
          break;
        case Sequence::Kind::Cst:
          out += ind + "cst " + cur->name.str();
          if (mode_ == Mode::Proof) out += " : " + ty(cur->type);
          out += " = " + expr(cur->value, ind) + ";\n";
          break;
        case Sequence::Kind::Var:
          out += ind + "var " + cur->name.str();
          if (mode_ == Mode::Proof) out += " : " + ty(cur->type);
          out += " := " + expr(cur->value, ind) + ";\n";
          break;
        case Sequence::Kind::Subst:
          if (mode_ == Mode::Proof)
            out += ind + "subst [" + typed_entries(cur->context, " : ") + "] at " +
                   cur->hole.str() + " by " + expr(cur->justification, ind) + ";\n";
          break;
      }
      cur = cur->next.get();
    }
    return out;
  }

  std::string expr(const ExprP& e, const std::string& ind) {
    std::string core = expr_core(*e, ind);
    if (mode_ != Mode::Proof) return core;
    return "(" + core + " : " + ty(e->type) + ")";
  }

private:
  Mode mode_;

  static std::string ty(const std::optional<Formula>& f) {
    return f ? to_string(*f) : std::string("?");
  }

  std::string expr_core(const Expr& e, const std::string& ind) {
    switch (e.kind) {
      case Expr::Kind::Id:
        return e.id.str();
      case Expr::Kind::Num:
        return std::to_string(e.num);
      case Expr::Kind::Star:
        if (mode_ == Mode::Proof && e.ob) return "* #" + std::to_string(*e.ob);
        return "*";
      case Expr::Kind::Proc:
        return proc_literal(e, ind);
      case Expr::Kind::Cast:
        if (mode_ == Mode::Erased) return expr(e.inner, ind);
        return expr(e.inner, ind) + " :> " + ty(e.target);
      case Expr::Kind::Coerce:
        if (mode_ == Mode::Erased) return expr(e.inner, ind);
        if (mode_ == Mode::Source) return expr(e.inner, ind) + " :> " + ty(e.type);
        return expr(e.inner, ind) + " :> [" + ty(e.target) + "] at " + e.hole.str() + " by " +
               expr(e.justification, ind);
      case Expr::Kind::Lemma: {
        if (mode_ != Mode::Proof) return "*";
        std::string r = "lemma [";
        for (std::size_t i = 0; i < e.hyps.size(); ++i) {
          if (i) r += ", ";
          r += to_string(e.hyps[i]);
        }
        return r + "] |- " + ty(e.target);
      }
    }
    return "?";
  }

  std::string half(const std::vector<Ident>& vars, const Env& env, const char* kw) {
    std::string r;
    if (mode_ != Mode::Erased && !vars.empty()) r += "{" + join_idents(vars) + "} ";
    if (!env.empty() || (mode_ != Mode::Erased && !vars.empty())) {
      r += kw;
      if (!env.empty())
        r += " " + (mode_ == Mode::Erased ? join_idents(env.keys())
                                          : typed_entries(env, " : "));
    }
    return r;
  }

  std::string proc_literal(const Expr& e, const std::string& ind) {
    std::string r = "proc(" + half(e.in_vars, e.params, "in") + ";";
    std::string out = half(e.out_vars, e.rets, "out");
    if (!out.empty()) r += " " + out;
    r += ") {\n" + seq(e.body, ind + kIndent) + ind + "}";
    return r;
  }

  std::string annot(const std::optional<OutSpec>& spec) {
    if (!spec) return "";
    if (mode_ == Mode::Erased) return join_idents(spec->vars.keys());
    std::string r;
    if (!spec->exists.empty()) r += "{" + join_idents(spec->exists) + "}";
    return r + typed_entries(spec->vars, ":");
  }

  std::string args(const std::vector<ExprP>& as, const std::string& ind) {
    std::string r;
    for (std::size_t i = 0; i < as.size(); ++i) {
      if (i) r += ", ";
      r += expr(as[i], ind);
    }
    return r;
  }

  std::string cmd(const Command& c, const std::string& ind) {
    const std::string inner = ind + kIndent;
    switch (c.kind) {
      case Command::Kind::Block:
        return "{\n" + seq(c.body, inner) + ind + "}" + annot(c.spec);
      case Command::Kind::For: {
        std::string r = "for " + c.name.str();
        if (mode_ == Mode::Proof) r += " [" + c.logical.value_or(c.name).str() + "]";
        return r + " := 0 until " + expr(c.expr, ind) + " {\n" + seq(c.body, inner) + ind +
               "}" + annot(c.spec);
      }
      case Command::Kind::Assign:
        if (mode_ == Mode::Proof)
          return c.name.str() + " : " + ty(c.type) + " := " + expr(c.expr, ind);
        return c.name.str() + " := " + expr(c.expr, ind);
      case Command::Kind::Inc:
      case Command::Kind::Dec: {
        std::string r = c.kind == Command::Kind::Inc ? "inc(" : "dec(";
        r += c.name.str();
        if (mode_ == Mode::Proof) r += " : " + ty(c.type);
        return r + ")";
      }
      case Command::Kind::Call: {
        std::string r = expr(c.expr, ind) + "(" + args(c.args, ind) + ";";
        for (std::size_t i = 0; i < c.outs.size(); ++i) {
          r += i ? ", " : " ";
          r += c.outs[i].str();
          if (mode_ == Mode::Proof)
            r += " : " + (c.out_types && i < c.out_types->size()
                              ? to_string((*c.out_types)[i])
                              : std::string("?"));
        }
        r += ")";
        if (mode_ == Mode::Proof) r += " with " + print_witness(c.witness.value_or(Substitution{}));
        return r;
      }
      case Command::Kind::Label:
        return c.name.str() + ": {\n" + seq(c.body, inner) + ind + "}" + annot(c.spec);
      case Command::Kind::Jump: {
        std::vector<ExprP> all{c.expr};
        all.insert(all.end(), c.args.begin(), c.args.end());
        std::string r = "jump(" + args(all, ind) + ")";
        if (mode_ == Mode::Proof)
          r += " with " + print_witness(c.witness.value_or(Substitution{})) + " ";
        return r + annot(c.spec);
      }
    }
    return "?";
  }
};

}  // namespace

std::string print_witness(const Substitution& w) {
  std::string r = "{";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) r += ", ";
    r += w[i].first.str() + " := " + to_string(w[i].second);
  }
  return r + "}";
}

std::string print_obligation(const Obligation& ob) {
  return std::to_string(ob.id) + ": |- " + to_string(Formula::equal(ob.lhs, ob.rhs));
}

std::string print_source(const SeqP& s) { return Printer(Mode::Source).seq(s, ""); }

std::string print_erased(const SeqP& s) { return Printer(Mode::Erased).seq(s, ""); }

std::string print_proof(const SeqP& s, const Obligations& obs) {
  std::string r = Printer(Mode::Proof).seq(s, "");
  if (!obs.empty()) {
    r += "\n";
    for (const auto& ob : obs) r += print_obligation(ob) + "\n";
  }
  return r;
}

}  // namespace loopw
