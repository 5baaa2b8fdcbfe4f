#include "loopw/functional.hpp"

namespace loopw {

namespace {

using K = FTerm::Kind;

std::string pad(std::size_t n) { return std::string(n, ' '); }

class FPrinter {
public:
  explicit FPrinter(bool erase) : erase_(erase) {}

  // First line unindented; continuation lines carry absolute indentation.
  std::string doc(const FTermP& t, std::size_t ind) {
    switch (t->kind) {
      case K::Var:
        return t->name.str() + ann(t->type);
      case K::Unit:
        if (erase_) return "()";
        return "() (* : " + to_string(t->type) + (t->ob ? " by #" + std::to_string(*t->ob) : "") +
               " *)";
      case K::Zero:
        return "0" + ann(t->type);
      case K::NumLit:
        return std::to_string(t->num);
      case K::Tuple:
        return "(" + list(t->kids, 0, ind) + ")";
      case K::Proj:
        return "#" + std::to_string(t->index + 1) + "(" + doc(t->kids[0], ind) + ")";
      case K::Succ:
        return "Succ(" + doc(t->kids[0], ind) + ")";
      case K::Pred:
        return "Pred(" + doc(t->kids[0], ind) + ")";
      case K::Lam: {
        std::string r = "fn (";
        for (std::size_t i = 0; i < t->params.size(); ++i) {
          if (i) r += ", ";
          r += t->params[i].first.str() + ann(t->params[i].second);
        }
        r += ") =>";
        if (t->kids[0]->kind == K::Lam) return r + " " + doc(t->kids[0], ind);
        return r + "\n" + pad(ind + 2) + doc(t->kids[0], ind + 2);
      }
      case K::App: {
        std::string r = doc(t->kids[0], ind) + "(" + list(t->kids, 1, ind) + ")";
        if (!erase_ && !t->inst.empty()) {
          r += " (* [";
          for (std::size_t i = 0; i < t->inst.size(); ++i) {
            if (i) r += ", ";
            r += to_string(t->inst[i]);
          }
          r += "] *)";
        }
        return r;
      }
      case K::Throw:
        return "throw " + doc(t->kids[0], ind) + "(" + list(t->kids, 1, ind) + ")";
      case K::Abort:
        return "abort(" + doc(t->kids[0], ind + 6) + ")" + ann(t->type);
      case K::Rec:
        return "Rec (" + doc(t->kids[0], ind) + ", " + doc(t->kids[1], ind) + ",\n" + pad(ind + 5) +
               doc(t->kids[2], ind + 5) + ")";
      case K::Coerce: {
        std::string r = doc(t->kids[0], ind);
        if (erase_) return r;
        const FTermP& j = t->kids[1];
        std::string eq = j->type.kind() == FFormula::Kind::Equal
                             ? to_string(j->type.terms()[0]) + " = " + to_string(j->type.terms()[1])
                             : to_string(j->type);
        std::string by = j->ob ? "#" + std::to_string(*j->ob) : "lemma";
        return r + "\n" + pad(ind + 2) + "(* :> {" + t->hole.str() + "/" + to_string(t->context) +
               "}[" + eq + " by " + by + "] *)";
      }
      case K::Pack: {
        if (erase_) return doc(t->kids[0], ind);
        std::string w;
        for (std::size_t i = 0; i < t->witness.size(); ++i) {
          if (i) w += ", ";
          w += t->witness[i].first.str() + " := " + to_string(t->witness[i].second);
        }
        return "(* pack {" + w + "} *) " + doc(t->kids[0], ind);
      }
      case K::Callcc:
        return "callcc (fn " + t->name.str() + ann(t->context) + " =>\n" + pad(ind + 2) +
               doc(t->kids[0], ind + 2) + ")";
      case K::Lemma: {
        if (erase_) return "lemma";
        std::string r = "lemma (* [";
        for (std::size_t i = 0; i < t->hyps.size(); ++i) {
          if (i) r += ", ";
          r += to_string(t->hyps[i]);
        }
        return r + "] |- " + to_string(t->type) + " *)";
      }
      case K::Let:
      case K::Unpack:
        return let(t, ind);
    }
    return "?";
  }

private:
  bool erase_;

  std::string ann(const FFormula& f) const { return erase_ ? "" : " (* : " + to_string(f) + " *)"; }

  std::string list(const std::vector<FTermP>& ks, std::size_t from, std::size_t ind) {
    std::string r;
    for (std::size_t i = from; i < ks.size(); ++i) {
      if (i > from) r += ", ";
      r += doc(ks[i], ind);
    }
    return r;
  }

  std::string pattern(const FTerm& t) const {
    std::string r;
    if (t.kind == K::Unpack && !erase_) r += "{" + join_idents(t.binders) + "} ";
    if (t.names.empty()) return r + "_";
    if (t.names.size() == 1) return r + t.names[0].str() + ann(t.kids[0]->type);
    r += "(" + join_idents(t.names) + ")";
    return r + ann(t.kids[0]->type);
  }

  std::string let(const FTermP& t, std::size_t ind) {
    std::string r = "let ";
    const FTerm* cur = t.get();
    bool first = true;
    while (cur->kind == K::Let || cur->kind == K::Unpack) {
      if (!first) r += "\n" + pad(ind + 4);
      first = false;
      std::string head = "val " + pattern(*cur) + " =";
      const FTermP& bound = cur->kids[0];
      std::string b = doc(bound, ind + 10);
      if (b.find('\n') != std::string::npos && bound->kind != K::Lam && bound->kind != K::Rec)
        r += head + "\n" + pad(ind + 10) + b;
      else
        r += head + " " + (bound->kind == K::Lam || bound->kind == K::Rec ? doc(bound, ind + 4) : b);
      cur = cur->kids[1].get();
    }
    FTermP body = t;
    while (body->kind == K::Let || body->kind == K::Unpack) body = body->kids[1];
    std::string b = doc(body, ind + 2);
    if (b.find('\n') == std::string::npos) return r + "\n" + pad(ind) + "in " + b + " end";
    return r + "\n" + pad(ind) + "in\n" + pad(ind + 2) + b + "\n" + pad(ind) + "end";
  }
};

void shape(const FTermP& t, std::string& out) {
  auto group = [&](const char* head, std::size_t from) {
    out += "(";
    out += head;
    for (std::size_t i = from; i < t->kids.size(); ++i) {
      out += " ";
      shape(t->kids[i], out);
    }
    out += ")";
  };
  switch (t->kind) {
    case K::Var:
      out += t->name.str();
      return;
    case K::Unit:
    case K::Lemma:
      out += "()";
      return;
    case K::Zero:
      out += "0";
      return;
    case K::NumLit:
      out += std::to_string(t->num);
      return;
    case K::Tuple:
      if (t->kids.empty()) {
        out += "()";
        return;
      }
      return group("tuple", 0);
    case K::Proj:
      out += "(proj " + std::to_string(t->index) + " ";
      shape(t->kids[0], out);
      out += ")";
      return;
    case K::Lam: {
      out += "(fn (";
      for (std::size_t i = 0; i < t->params.size(); ++i) {
        if (i) out += " ";
        out += t->params[i].first.str();
      }
      out += ") ";
      shape(t->kids[0], out);
      out += ")";
      return;
    }
    case K::App:
      return group("app", 0);
    case K::Throw:
      return group("throw", 0);
    case K::Let:
    case K::Unpack:
      out += "(let (" + join_idents(t->names, " ") + ") ";
      shape(t->kids[0], out);
      out += " ";
      shape(t->kids[1], out);
      out += ")";
      return;
    case K::Rec:
      return group("rec", 0);
    case K::Succ:
      return group("succ", 0);
    case K::Pred:
      return group("pred", 0);
    case K::Abort:
      return group("abort", 0);
    case K::Coerce:
    case K::Pack:
      shape(t->kids[0], out);
      return;
    case K::Callcc:
      out += "(callcc " + t->name.str() + " ";
      shape(t->kids[0], out);
      out += ")";
      return;
  }
}

}  // namespace

std::string fprint(const FTermP& t, bool erase, const Obligations& obs) {
  FPrinter p(erase);
  std::string r = p.doc(t, 0) + "\n";
  if (!obs.empty()) {
    r += "\n";
    for (const auto& ob : obs)
      r += "(* " + std::to_string(ob.id) + ":  |- " + to_string(ob.lhs) + " = " + to_string(ob.rhs) +
           " *)\n";
  }
  return r;
}

std::string fshape(const FTermP& t) {
  std::string r;
  shape(t, r);
  return r;
}

}  // namespace loopw
