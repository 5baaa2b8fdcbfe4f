#include "loopw/program.hpp"

namespace loopw {

std::vector<Ident> Obligation::free_vars() const {
  IdentSet s;
  collect_free_vars(lhs, s);
  collect_free_vars(rhs, s);
  return {s.begin(), s.end()};
}

SeqP empty_seq(std::optional<Substitution> witness) {
  Sequence s;
  s.kind = Sequence::Kind::Empty;
  s.witness = std::move(witness);
  return make(std::move(s));
}

SeqP seq_cmd(CommandP c, SeqP next) {
  Sequence s;
  s.kind = Sequence::Kind::Seq;
  s.region = c->region;
  s.cmd = std::move(c);
  s.next = std::move(next);
  return make(std::move(s));
}

namespace {

template <class T>
bool same_list(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same(a[i], b[i])) return false;
  return true;
}

bool same_subst(const std::optional<Substitution>& a, const std::optional<Substitution>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  if (a->size() != b->size()) return false;
  for (std::size_t i = 0; i < a->size(); ++i)
    if ((*a)[i].first != (*b)[i].first || !((*a)[i].second == (*b)[i].second)) return false;
  return true;
}

}  // namespace

bool same(const ExprP& a, const ExprP& b) {
  if (!a || !b) return !a && !b;
  return same(*a, *b);
}

bool same(const SeqP& a, const SeqP& b) {
  if (!a || !b) return !a && !b;
  return same(*a, *b);
}

bool same(const OutSpec& a, const OutSpec& b) {
  return a.exists == b.exists && a.vars == b.vars;
}

bool same(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.type != b.type) return false;
  switch (a.kind) {
    case Expr::Kind::Id:
      return a.id == b.id;
    case Expr::Kind::Num:
      return a.num == b.num;
    case Expr::Kind::Star:
      return a.ob == b.ob;
    case Expr::Kind::Proc:
      return a.in_vars == b.in_vars && a.params == b.params && a.out_vars == b.out_vars &&
             a.rets == b.rets && same(a.body, b.body);
    case Expr::Kind::Cast:
      return a.target == b.target && same(a.inner, b.inner);
    case Expr::Kind::Coerce:
      return a.target == b.target && a.hole == b.hole && same(a.inner, b.inner) &&
             same(a.justification, b.justification);
    case Expr::Kind::Lemma:
      return a.hyps == b.hyps;
  }
  return false;
}

bool same(const Command& a, const Command& b) {
  if (a.kind != b.kind || a.name != b.name || a.logical != b.logical || a.type != b.type ||
      a.outs != b.outs || a.out_types != b.out_types || !same(a.expr, b.expr) ||
      !same_list(a.args, b.args) || !same_subst(a.witness, b.witness) ||
      !same(a.body, b.body) || a.spec.has_value() != b.spec.has_value())
    return false;
  return !a.spec || same(*a.spec, *b.spec);
}

bool same(const Sequence& a, const Sequence& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Sequence::Kind::Empty:
      return same_subst(a.witness, b.witness);
    case Sequence::Kind::Seq:
      return same(*a.cmd, *b.cmd) && same(a.next, b.next);
    case Sequence::Kind::Cst:
    case Sequence::Kind::Var:
      return a.name == b.name && a.type == b.type && same(a.value, b.value) &&
             same(a.next, b.next);
    case Sequence::Kind::Subst:
      return a.context == b.context && a.hole == b.hole &&
             same(a.justification, b.justification) && same(a.next, b.next);
  }
  return false;
}

std::string where(const Region& r) {
  return r.file + ":" + std::to_string(r.line) + ":" + std::to_string(r.col);
}

}  // namespace loopw
