#include <algorithm>
#include <set>

#include "loopw/checker.hpp"
#include "loopw/functional.hpp"
#include "loopw/printer.hpp"

namespace loopw {

namespace {

const char* kIndent = "    ";

struct Row {
  std::string left;
  std::string right;
  int depth = 0;
};

using Refs = std::set<unsigned>;

std::string by(const Refs& refs) {
  if (refs.empty()) return "";
  std::string r = "by ";
  bool first = true;
  for (unsigned n : refs) {
    if (!first) r += ", ";
    first = false;
    r += "#" + std::to_string(n);
  }
  return r;
}

std::string with_refs(const std::string& judgment, const Refs& refs) {
  if (refs.empty()) return judgment;
  if (judgment.empty()) return by(refs);
  return judgment + "    " + by(refs);
}

// Obligations cited by an expression outside nested procedure bodies.
void expr_refs(const ExprP& e, Refs& out) {
  if (!e) return;
  if (e->kind == Expr::Kind::Star && e->ob) out.insert(*e->ob);
  expr_refs(e->inner, out);
  expr_refs(e->justification, out);
}

class TypView {
public:
  explicit TypView(bool formula_view) : form_(formula_view) {}

  std::vector<Row> rows;

  void seq(const SeqP& s, const std::string& ind, int depth, Refs& end_refs) {
    const Sequence* cur = s.get();
    while (cur) {
      switch (cur->kind) {
        case Sequence::Kind::Empty:
          return;
        case Sequence::Kind::Subst:
          expr_refs(cur->justification, end_refs);
          break;
        case Sequence::Kind::Cst: {
          line_ = ind + "cst " + cur->name.str() + " = ";
          Refs refs;
          expr(cur->value, ind, depth, refs);
          std::string t = cur->type ? ty(*cur->type) : "?";
          flush(";", with_refs("(" + cur->name.str() + ":" + t + ")", refs), depth);
          break;
        }
        case Sequence::Kind::Var: {
          line_ = ind + "var " + cur->name.str() + " := ";
          Refs refs;
          expr(cur->value, ind, depth, refs);
          flush(";", with_refs(retype(cur->name, cur->type), refs), depth);
          break;
        }
        case Sequence::Kind::Seq:
          cmd(*cur->cmd, ind, depth);
          break;
      }
      cur = cur->next.get();
    }
  }

private:
  std::string line_;
  bool form_;

  std::string ty(const Formula& f) const {
    return form_ ? to_string(translate_formula(f)) : to_string(f);
  }

  std::string entries(const Env& env) const {
    std::string r;
    bool first = true;
    for (const auto& [k, f] : env) {
      if (!first) r += ", ";
      first = false;
      r += k.str() + ":" + ty(f);
    }
    return r;
  }

  std::string retype(const Ident& x, const std::optional<Formula>& t) const {
    return "[" + x.str() + ":" + (t ? ty(*t) : std::string("?")) + "]";
  }

  static std::string annot(const std::optional<OutSpec>& spec) {
    if (!spec) return "";
    return join_idents(spec->vars.keys());
  }

  std::string judgment(const std::optional<OutSpec>& spec) {
    if (!spec) return "[]";
    std::string r;
    if (!spec->exists.empty()) r += "{" + join_idents(spec->exists) + "}";
    return r + "[" + entries(spec->vars) + "]";
  }

  void flush(const std::string& suffix, const std::string& right, int depth) {
    rows.push_back({line_ + suffix, right, depth});
    line_.clear();
  }

  void expr(const ExprP& e, const std::string& ind, int depth, Refs& refs) {
    switch (e->kind) {
      case Expr::Kind::Id:
        line_ += e->id.str();
        return;
      case Expr::Kind::Num:
        line_ += std::to_string(e->num);
        return;
      case Expr::Kind::Star:
        if (e->ob) refs.insert(*e->ob);
        line_ += "*";
        return;
      case Expr::Kind::Lemma:
        line_ += "*";
        return;
      case Expr::Kind::Cast:
        expr(e->inner, ind, depth, refs);
        return;
      case Expr::Kind::Coerce:
        expr(e->inner, ind, depth, refs);
        expr_refs(e->justification, refs);
        return;
      case Expr::Kind::Proc: {
        line_ += "proc(";
        if (!e->params.empty()) line_ += "in " + join_idents(e->params.keys());
        line_ += ";";
        if (!e->rets.empty()) line_ += " out " + join_idents(e->rets.keys());
        line_ += ") {";
        Env seeded = e->rets.map([](const Formula&) { return Formula::top(); });
        flush("", "-(" + entries(e->params) + ")[" + entries(seeded) + "]", depth);
        seq(e->body, ind + kIndent, depth + 1, refs);
        line_ = ind + "}";
        return;
      }
    }
  }

  void args(const std::vector<ExprP>& as, const std::string& ind, int depth, Refs& refs) {
    for (std::size_t i = 0; i < as.size(); ++i) {
      if (i) line_ += ", ";
      expr(as[i], ind, depth, refs);
    }
  }

  void nested(const SeqP& body, const std::string& ind, int depth,
              const std::optional<OutSpec>& spec, Refs refs, const std::string& right) {
    seq(body, ind + kIndent, depth + 1, refs);
    line_ = ind + "}" + annot(spec);
    flush(";", with_refs(right, refs), depth);
  }

  void cmd(const Command& c, const std::string& ind, int depth) {
    Refs refs;
    switch (c.kind) {
      case Command::Kind::Block:
        line_ = ind + "{";
        flush("", "", depth);
        nested(c.body, ind, depth, c.spec, {}, judgment(c.spec));
        return;
      case Command::Kind::Label: {
        line_ = ind + c.name.str() + ": {";
        std::string k = c.spec ? ty(label_type(*c.spec)) : "?";
        flush("", "-(" + c.name.str() + ":" + k + ")", depth);
        nested(c.body, ind, depth, c.spec, {}, judgment(c.spec));
        return;
      }
      case Command::Kind::For: {
        line_ = ind + "for " + c.name.str() + " := 0 until ";
        expr(c.expr, ind, depth, refs);
        line_ += " {";
        const Ident lid = c.logical.value_or(c.name);
        Env sigma = c.spec ? c.spec->vars : Env{};
        flush("", "-(" + c.name.str() + ":nat(" + lid.str() + "))[" + entries(sigma) + "]",
              depth);
        Env after = sigma;
        if (c.expr->type && c.expr->type->kind() == Formula::Kind::Nat)
          after = subst_env(sigma, Substitution{{lid, c.expr->type->terms()[0]}});
        nested(c.body, ind, depth, c.spec, refs, "[" + entries(after) + "]");
        return;
      }
      case Command::Kind::Assign:
        line_ = ind + c.name.str() + " := ";
        expr(c.expr, ind, depth, refs);
        flush(";", with_refs(retype(c.name, c.type), refs), depth);
        return;
      case Command::Kind::Inc:
      case Command::Kind::Dec: {
        const bool inc = c.kind == Command::Kind::Inc;
        line_ = ind + (inc ? "inc(" : "dec(") + c.name.str() + ")";
        std::optional<Formula> t;
        if (c.type && c.type->kind() == Formula::Kind::Nat) {
          const Term& n = c.type->terms()[0];
          t = Formula::nat(inc ? Term::succ(n) : Term::pred(n));
        }
        flush(";", retype(c.name, t), depth);
        return;
      }
      case Command::Kind::Call: {
        line_ = ind;
        expr(c.expr, ind, depth, refs);
        line_ += "(";
        args(c.args, ind, depth, refs);
        line_ += ";";
        for (std::size_t i = 0; i < c.outs.size(); ++i) line_ += (i ? ", " : " ") + c.outs[i].str();
        line_ += ")";
        Env outs;
        for (std::size_t i = 0; i < c.outs.size(); ++i)
          outs = outs.updated(c.outs[i], c.out_types && i < c.out_types->size()
                                             ? (*c.out_types)[i]
                                             : Formula::top());
        flush(";", with_refs("[" + entries(outs) + "]", refs), depth);
        return;
      }
      case Command::Kind::Jump: {
        line_ = ind + "jump(";
        std::vector<ExprP> all{c.expr};
        all.insert(all.end(), c.args.begin(), c.args.end());
        args(all, ind, depth, refs);
        line_ += ")" + annot(c.spec);
        flush(";", with_refs("", refs), depth);
        return;
      }
    }
  }
};

}  // namespace

std::string print_typ_view(const SeqP& s, const Obligations& obs,
                           const std::vector<std::string>& report, bool formula_view) {
  TypView v(formula_view);
  Refs end_refs;
  v.seq(s, "", 0, end_refs);
  if (!end_refs.empty() && !v.rows.empty())
    v.rows.back().right = with_refs(v.rows.back().right, end_refs);

  std::size_t width = 0;
  for (const auto& r : v.rows) width = std::max(width, r.left.size());
  width += 3;

  std::string out;
  for (const auto& r : v.rows) {
    std::string right;
    for (int i = 0; i < r.depth; ++i) right += "|   ";
    right += r.right;
    while (!right.empty() && right.back() == ' ') right.pop_back();
    if (right.empty()) {
      out += r.left + "\n";
      continue;
    }
    out += r.left + std::string(width - r.left.size(), ' ') + right + "\n";
  }
  if (!obs.empty()) {
    out += "\n";
    for (const auto& ob : obs) out += print_obligation(ob) + "\n";
  }
  if (!report.empty()) {
    out += "\n";
    for (const auto& line : report) out += line + "\n";
  }
  return out;
}

}  // namespace loopw
