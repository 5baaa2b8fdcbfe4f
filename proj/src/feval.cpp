#include "loopw/functional.hpp"

namespace loopw {

namespace {

using K = FTerm::Kind;

struct EnvNode;
using EnvP = std::shared_ptr<const EnvNode>;
struct EnvNode {
  Ident name;
  FValueP val;
  EnvP next;
};

struct Frame;
using ContP = std::shared_ptr<const Frame>;
struct Frame {
  enum class Kind { Kids, LetBody, RecInner, RecNext, Dead };
  Kind kind = Kind::Kids;
  FTermP term;
  EnvP env;
  std::vector<FValueP> vals;
  FValueP step, acc;
  std::uint64_t idx = 0, n = 0;
  ContP next;
};

[[noreturn]] void stuck(const std::string& msg) { throw EvalError(EvalError::Kind::Stuck, msg); }

FValueP make_value(FValue v) { return std::make_shared<const FValue>(std::move(v)); }

FValueP num(std::uint64_t q) {
  FValue v;
  v.kind = FValue::Kind::Num;
  v.num = q;
  return make_value(std::move(v));
}

FValueP unit_value() {
  static const FValueP u = make_value(FValue{});
  return u;
}

FValueP collapse(std::vector<FValueP> vs) {
  if (vs.size() == 1) return vs[0];
  if (vs.empty()) return unit_value();
  FValue v;
  v.kind = FValue::Kind::Tuple;
  v.elems = std::move(vs);
  return make_value(std::move(v));
}

EnvP extend(EnvP env, const Ident& x, FValueP v) {
  return std::make_shared<const EnvNode>(EnvNode{x, std::move(v), std::move(env)});
}

EnvP bind_names(EnvP env, const std::vector<Ident>& names, const FValueP& v) {
  if (names.size() == 1) return extend(std::move(env), names[0], v);
  if (names.empty()) return env;
  if (v->kind != FValue::Kind::Tuple || v->elems.size() != names.size())
    stuck("cannot destructure " + to_string(*v) + " into " + std::to_string(names.size()) +
          " names");
  for (std::size_t i = 0; i < names.size(); ++i) env = extend(std::move(env), names[i], v->elems[i]);
  return env;
}

std::vector<FValueP> spread(const FValueP& v, std::size_t arity) {
  if (arity == 1) return {v};
  if (arity == 0) return {};
  if (v->kind != FValue::Kind::Tuple || v->elems.size() != arity)
    stuck("arity mismatch on " + to_string(*v));
  return v->elems;
}

ContP push(Frame f) { return std::make_shared<const Frame>(std::move(f)); }

class Machine {
public:
  explicit Machine(std::uint64_t fuel) : fuel_(fuel) {}

  FValueP run(const FTermP& t) {
    eval(t, nullptr);
    while (true) {
      if (fuel_-- == 0) throw EvalError(EvalError::Kind::OutOfFuel, "out of fuel");
      if (mode_ == Mode::Eval) {
        step_eval();
        continue;
      }
      if (!k_) return val_;
      step_return();
    }
  }

private:
  enum class Mode { Eval, Return };
  Mode mode_ = Mode::Eval;
  FTermP term_;
  EnvP env_;
  FValueP val_;
  ContP k_;
  std::uint64_t fuel_;

  void eval(FTermP t, EnvP env) {
    mode_ = Mode::Eval;
    term_ = std::move(t);
    env_ = std::move(env);
  }

  void ret(FValueP v) {
    mode_ = Mode::Return;
    val_ = std::move(v);
  }

  static std::size_t evaluated_kids(const FTerm& t) {
    return t.kind == K::Coerce ? 1 : t.kids.size();
  }

  void step_eval() {
    const FTermP t = term_;
    switch (t->kind) {
      case K::Var: {
        for (const EnvNode* e = env_.get(); e; e = e->next.get())
          if (e->name == t->name) return ret(e->val);
        stuck("unbound variable " + t->name.str());
      }
      case K::Unit:
      case K::Lemma:
        return ret(unit_value());
      case K::Zero:
        return ret(num(0));
      case K::NumLit:
        return ret(num(t->num));
      case K::Lam: {
        FValue v;
        v.kind = FValue::Kind::Closure;
        v.env = env_;
        v.lam = t;
        return ret(make_value(std::move(v)));
      }
      case K::Let:
      case K::Unpack: {
        Frame f;
        f.kind = Frame::Kind::LetBody;
        f.term = t;
        f.env = env_;
        f.next = k_;
        k_ = push(std::move(f));
        return eval(t->kids[0], env_);
      }
      case K::Callcc: {
        FValue c;
        c.kind = FValue::Kind::Cont;
        c.cont = k_;
        return eval(t->kids[0], extend(env_, t->name, make_value(std::move(c))));
      }
      default: {
        if (evaluated_kids(*t) == 0) return finish(t, {});
        Frame f;
        f.kind = Frame::Kind::Kids;
        f.term = t;
        f.env = env_;
        f.next = k_;
        k_ = push(std::move(f));
        return eval(t->kids[0], env_);
      }
    }
  }

  void step_return() {
    const ContP f = k_;
    k_ = f->next;
    switch (f->kind) {
      case Frame::Kind::Kids: {
        std::vector<FValueP> vals = f->vals;
        vals.push_back(val_);
        if (vals.size() < evaluated_kids(*f->term)) {
          Frame g = *f;
          g.vals = std::move(vals);
          k_ = push(std::move(g));
          return eval(f->term->kids[k_->vals.size()], f->env);
        }
        return finish(f->term, vals);
      }
      case Frame::Kind::LetBody:
        return eval(f->term->kids[1], bind_names(f->env, f->term->names, val_));
      case Frame::Kind::RecInner: {
        // val_ is step(idx); feed it the accumulator.
        if (val_->kind != FValue::Kind::Closure) stuck("recursion step is not a function");
        Frame g;
        g.kind = Frame::Kind::RecNext;
        g.step = f->step;
        g.idx = f->idx + 1;
        g.n = f->n;
        g.next = k_;
        k_ = push(std::move(g));
        return apply(val_, spread(f->acc, val_->lam->params.size()));
      }
      case Frame::Kind::RecNext:
        return rec_iter(f->step, val_, f->idx, f->n);
      case Frame::Kind::Dead:
        stuck("a jump target returned");
    }
  }

  void rec_iter(const FValueP& step, const FValueP& acc, std::uint64_t idx, std::uint64_t n) {
    if (idx == n) return ret(acc);
    Frame g;
    g.kind = Frame::Kind::RecInner;
    g.step = step;
    g.acc = acc;
    g.idx = idx;
    g.n = n;
    g.next = k_;
    k_ = push(std::move(g));
    apply(step, {num(idx)});
  }

  void apply(const FValueP& f, std::vector<FValueP> args) {
    if (f->kind == FValue::Kind::Cont) {
      k_ = std::static_pointer_cast<const Frame>(f->cont);
      return ret(collapse(std::move(args)));
    }
    if (f->kind != FValue::Kind::Closure) stuck("applying " + to_string(*f));
    const FTerm& lam = *f->lam;
    if (lam.params.size() != args.size())
      stuck("arity mismatch: " + std::to_string(args.size()) + " arguments for " +
            std::to_string(lam.params.size()) + " parameters");
    EnvP env = std::static_pointer_cast<const EnvNode>(f->env);
    for (std::size_t i = 0; i < args.size(); ++i) env = extend(std::move(env), lam.params[i].first, args[i]);
    eval(lam.kids[0], std::move(env));
  }

  void finish(const FTermP& t, std::vector<FValueP> vals) {
    switch (t->kind) {
      case K::Tuple:
        return ret(collapse(std::move(vals)));
      case K::Proj:
        if (vals[0]->kind != FValue::Kind::Tuple || t->index >= vals[0]->elems.size())
          stuck("projection out of " + to_string(*vals[0]));
        return ret(vals[0]->elems[t->index]);
      case K::Succ:
      case K::Pred: {
        if (vals[0]->kind != FValue::Kind::Num) stuck("arithmetic on " + to_string(*vals[0]));
        const std::uint64_t q = vals[0]->num;
        if (t->kind == K::Succ) {
          if (q == UINT64_MAX) stuck("numeral overflow");
          return ret(num(q + 1));
        }
        return ret(num(q == 0 ? 0 : q - 1));
      }
      case K::Coerce:
      case K::Pack:
        return ret(vals[0]);
      case K::Abort:
        stuck("abort reached with a value");
      case K::App: {
        FValueP f = vals[0];
        vals.erase(vals.begin());
        return apply(f, std::move(vals));
      }
      case K::Throw: {
        FValueP f = vals[0];
        vals.erase(vals.begin());
        if (f->kind == FValue::Kind::Closure) {
          Frame d;
          d.kind = Frame::Kind::Dead;
          k_ = push(std::move(d));
        }
        return apply(f, std::move(vals));
      }
      case K::Rec: {
        if (vals[0]->kind != FValue::Kind::Num) stuck("recursion bound is not a numeral");
        return rec_iter(vals[2], vals[1], 0, vals[0]->num);
      }
      default:
        stuck("unexpected term");
    }
  }
};

}  // namespace

FValueP feval(const FTermP& t, std::uint64_t fuel) {
  Machine m(fuel);
  return m.run(t);
}

std::string to_string(const FValue& v) {
  switch (v.kind) {
    case FValue::Kind::Num:
      return std::to_string(v.num);
    case FValue::Kind::Unit:
      return "()";
    case FValue::Kind::Tuple: {
      std::string r = "(";
      for (std::size_t i = 0; i < v.elems.size(); ++i) {
        if (i) r += ", ";
        r += to_string(*v.elems[i]);
      }
      return r + ")";
    }
    case FValue::Kind::Closure:
      return "<fn>";
    case FValue::Kind::Cont:
      return "<cont>";
  }
  return "?";
}

}  // namespace loopw
