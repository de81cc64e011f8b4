#include "presup/evaluator.hpp"

namespace presup {

namespace {

// Recursion through neutral spines can grow without a reduction at the top,
// so depth is bounded as well as the reduction count.
constexpr std::size_t max_depth = 5000;

class Budget {
public:
  explicit Budget(std::size_t steps) : remaining_(steps) {}

  void tick() {
    if (remaining_ == 0) {
      throw EvalError(EvalErrorKind::NonTermination, "evaluation step budget exceeded");
    }
    --remaining_;
  }

  struct Frame {
    explicit Frame(Budget& b) : b_(b) {
      if (++b_.depth_ > max_depth) {
        --b_.depth_;
        throw EvalError(EvalErrorKind::NonTermination, "evaluation nesting limit exceeded");
      }
    }
    ~Frame() { --b_.depth_; }
    Budget& b_;
  };

private:
  std::size_t remaining_;
  std::size_t depth_ = 0;
};

Term eval(Term t, Budget& budget) {
  Budget::Frame frame(budget);
  for (;;) {
    budget.tick();
    switch (t.kind()) {
      case Kind::Universe:
      case Kind::Pi:
      case Kind::Sigma:
      case Kind::Lam:
      case Kind::Pair:
        return t;
      case Kind::Var:
        throw EvalError(EvalErrorKind::StuckTerm, "free variable " + t.name() + " in closed evaluation");
      case Kind::Const:
        throw EvalError(EvalErrorKind::StuckTerm, "constant " + t.name() + " has no computational content");
      case Kind::Require:
        throw EvalError(EvalErrorKind::UnresolvedRequire,
                        "require has no value until a witness is supplied");
      case Kind::Fst:
      case Kind::Snd: {
        Term p = eval(t.pair(), budget);
        if (!p.is(Kind::Pair)) {
          throw EvalError(EvalErrorKind::StuckTerm, "projection of a non-pair");
        }
        t = t.is(Kind::Fst) ? p.first() : p.second();
        continue;
      }
      case Kind::App: {
        Term f = eval(t.fun(), budget);
        if (!f.is(Kind::Lam)) {
          throw EvalError(EvalErrorKind::StuckTerm, "application of a non-function");
        }
        t = substitute(f.body(), f.binder(), t.arg());
        continue;
      }
      case Kind::Let:
        t = substitute(t.body(), t.binder(), t.def());
        continue;
    }
  }
}

Term nf(Term t, Budget& budget) {
  Budget::Frame frame(budget);
  for (;;) {
    switch (t.kind()) {
      case Kind::Var:
      case Kind::Const:
      case Kind::Universe:
        return t;
      case Kind::Pi:
      case Kind::Sigma:
      case Kind::Lam:
      case Kind::Pair:
      case Kind::Require: {
        std::array<Term, 3> kids{};
        for (std::size_t i = 0; i < t.arity(); ++i) kids[i] = nf(t.child(i), budget);
        return t.with_children(kids);
      }
      case Kind::App: {
        Term f = nf(t.fun(), budget);
        if (f.is(Kind::Lam)) {
          budget.tick();
          t = substitute(f.body(), f.binder(), t.arg());
          continue;
        }
        return make_app(std::move(f), nf(t.arg(), budget));
      }
      case Kind::Fst:
      case Kind::Snd: {
        Term p = nf(t.pair(), budget);
        if (p.is(Kind::Pair)) {
          budget.tick();
          return t.is(Kind::Fst) ? p.first() : p.second();
        }
        return t.is(Kind::Fst) ? make_fst(std::move(p)) : make_snd(std::move(p));
      }
      case Kind::Let:
        budget.tick();
        t = substitute(t.body(), t.binder(), t.def());
        continue;
    }
  }
}

} // namespace

Term eval_closed(const Term& t, std::size_t step_budget) {
  Budget budget(step_budget);
  return eval(t, budget);
}

Term normalize(const Term& t, std::size_t step_budget) {
  Budget budget(step_budget);
  return nf(t, budget);
}

bool is_canonical(const Term& t) {
  switch (t.kind()) {
    case Kind::Universe:
    case Kind::Pi:
    case Kind::Sigma:
    case Kind::Lam:
    case Kind::Pair:
      return true;
    default:
      return false;
  }
}

} // namespace presup
