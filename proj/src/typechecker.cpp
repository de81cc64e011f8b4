#include "presup/typechecker.hpp"

#include <algorithm>

#include "presup/elaborator.hpp"
#include "presup/evaluator.hpp"
#include "presup/solver.hpp"
#include "presup/syntax.hpp"

namespace presup {

const char* type_error_name(TypeErrorKind kind) {
  switch (kind) {
    case TypeErrorKind::DuplicateName: return "DuplicateName";
    case TypeErrorKind::IllTypedEntry: return "IllTypedEntry";
    case TypeErrorKind::CannotInfer: return "CannotInfer";
    case TypeErrorKind::UnboundName: return "UnboundName";
    case TypeErrorKind::NotAFunction: return "NotAFunction";
    case TypeErrorKind::NotAPair: return "NotAPair";
    case TypeErrorKind::NotAType: return "NotAType";
    case TypeErrorKind::TypeMismatch: return "TypeMismatch";
    case TypeErrorKind::ScopeEscape: return "ScopeEscape";
    case TypeErrorKind::PresuppositionInType: return "PresuppositionInType";
    case TypeErrorKind::UnresolvedPresupposition: return "UnresolvedPresupposition";
    case TypeErrorKind::BudgetExceeded: return "BudgetExceeded";
    case TypeErrorKind::InvalidDerivation: return "InvalidDerivation";
  }
  return "?";
}

void CheckConfig::validate() const {
  if (solver_depth == 0 || max_solutions_per_require == 0 || max_total_derivations == 0 ||
      step_budget == 0) {
    throw std::invalid_argument("CheckConfig bounds must be positive");
  }
}

namespace {

using Derivations = std::vector<DerivationPtr>;

class Checker {
public:
  Checker(const Signature& sig, const CheckConfig& cfg) : sig_(sig), cfg_(cfg) {}

  Derivations infer(const Context& ctx, const Term& t) {
    switch (t.kind()) {
      case Kind::Var: {
        const Term* type = ctx.lookup(t.name());
        if (!type) throw error(TypeErrorKind::UnboundName, "unbound variable " + t.name(), t, ctx);
        return {make_derivation(Rule::Hyp, {ctx, t, *type})};
      }
      case Kind::Const: {
        const Term* type = sig_.lookup(t.name());
        if (!type) throw error(TypeErrorKind::UnboundName, "unknown constant " + t.name(), t, ctx);
        return {make_derivation(Rule::Const, {ctx, t, *type})};
      }
      case Kind::Universe:
        return {make_derivation(Rule::Cumulativity, {ctx, t, make_universe(t.level() + 1)})};
      case Kind::Pi:
      case Kind::Sigma:
        return infer_formation(ctx, freshen(ctx, t));
      case Kind::App:
        return infer_app(ctx, t);
      case Kind::Fst:
      case Kind::Snd:
        return infer_projection(ctx, t);
      case Kind::Let:
        return infer_let(ctx, freshen(ctx, t));
      case Kind::Require:
        return with_require(ctx, freshen(ctx, t), [&](const Term& body) { return infer(ctx, body); });
      case Kind::Lam:
      case Kind::Pair:
        throw error(TypeErrorKind::CannotInfer,
                    std::string("cannot infer the type of a ") + (t.is(Kind::Lam) ? "lambda" : "pair") +
                        "; check it against a type instead",
                    t, ctx);
    }
    return {};
  }

  Derivations check(const Context& ctx, const Term& t, const Term& type) {
    switch (t.kind()) {
      case Kind::Lam:
        return check_lam(ctx, freshen(ctx, t), type);
      case Kind::Pair:
        return check_pair(ctx, t, type);
      case Kind::Require: {
        Term r = freshen(ctx, t);
        return with_require(ctx, r, [&](const Term& body) { return check(ctx, body, type); }, type);
      }
      case Kind::Let:
        return check_let(ctx, freshen(ctx, t), type);
      case Kind::Universe: {
        Term u = nf(type);
        if (u.is(Kind::Universe) && t.level() < u.level()) {
          return {make_derivation(Rule::Cumulativity, {ctx, t, type})};
        }
        throw mismatch(ctx, t, type, make_universe(t.level() + 1));
      }
      default:
        break;
    }
    return each(infer(ctx, t), [&](const DerivationPtr& d) -> Derivations {
      if (alpha_eq(d->type(), type)) return {d};
      if (conv(d->type(), type)) return {make_derivation(Rule::Conv, {ctx, t, type}, {d})};
      throw mismatch(ctx, t, type, d->type());
    });
  }

  // Level i with Γ ⊢ type : Set_i. The type must be require-free.
  std::uint32_t level_of_type(const Context& ctx, const Term& type) {
    if (contains_require(type)) {
      throw error(TypeErrorKind::PresuppositionInType,
                  "type " + format_term(type) + " contains a presupposition", type, ctx);
    }
    auto ds = infer(ctx, type);
    return level_of(ctx, *ds.front());
  }

  Term nf(const Term& t) const {
    try {
      return normalize(t, cfg_.step_budget);
    } catch (const EvalError& e) {
      throw TypeError(TypeErrorKind::BudgetExceeded, e.what(), t);
    }
  }

  bool conv(const Term& a, const Term& b) const { return alpha_eq(nf(a), nf(b)); }

private:
  static TypeError error(TypeErrorKind kind, const std::string& what, const Term& subject,
                         const Context& ctx) {
    return TypeError(kind, what, subject, {}, ctx);
  }

  static TypeError mismatch(const Context& ctx, const Term& t, const Term& expected, const Term& found) {
    return TypeError(TypeErrorKind::TypeMismatch,
                     "type mismatch for " + format_term(t) + ": expected " + format_term(expected) +
                         ", found " + format_term(found),
                     t, {}, ctx);
  }

  bool taken(const Context& ctx, const std::string& name) const {
    return ctx.contains(name) || sig_.contains(name);
  }

  // Renames the binder of a binding form away from Γ ∪ Σ.
  Term freshen(const Context& ctx, const Term& t) const {
    if (!taken(ctx, t.binder())) return t;
    const Term& scoped = t.body();
    auto name = fresh_name(t.binder(), [&](const std::string& n) {
      return taken(ctx, n) || occurs_free(n, scoped);
    });
    std::array<Term, 3> kids{};
    for (std::size_t i = 0; i < t.arity(); ++i) kids[i] = t.child(i);
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (&t.child(i) == &scoped) kids[i] = substitute(scoped, t.binder(), make_var(name));
    }
    return t.with_binder(name, kids);
  }

  std::uint32_t level_of(const Context& ctx, const Derivation& d) const {
    Term u = nf(d.type());
    if (!u.is(Kind::Universe)) {
      throw TypeError(TypeErrorKind::NotAType,
                      format_term(d.subject()) + " is not a type (its type is " + format_term(d.type()) + ")",
                      d.subject(), {}, ctx);
    }
    return u.level();
  }

  // Runs `step` on every alternative. An alternative that fails with a type
  // error is dropped; if all of them fail, the first error propagates.
  template <class Alt, class F>
  Derivations each(const std::vector<Alt>& alts, F step) {
    Derivations out;
    std::optional<TypeError> first;
    for (const auto& alt : alts) {
      try {
        for (auto& d : step(alt)) {
          if (out.size() >= cfg_.max_total_derivations) return out;
          out.push_back(std::move(d));
        }
      } catch (const TypeError& e) {
        if (e.kind() == TypeErrorKind::BudgetExceeded) throw;
        if (!first) first = e;
      }
    }
    if (out.empty() && first) throw *first;
    return out;
  }

  Derivations infer_formation(const Context& ctx, const Term& t) {
    const Rule rule = t.is(Kind::Pi) ? Rule::PiF : Rule::SigF;
    return each(infer(ctx, t.domain()), [&](const DerivationPtr& dom) {
      const std::uint32_t i = level_of(ctx, *dom);
      Context inner = ctx.extended(t.binder(), elaborate_unchecked(*dom));
      return each(infer(inner, t.codomain()), [&](const DerivationPtr& cod) -> Derivations {
        const std::uint32_t j = level_of(inner, *cod);
        return {make_derivation(rule, {ctx, t, make_universe(std::max(i, j))}, {dom, cod})};
      });
    });
  }

  Derivations infer_app(const Context& ctx, const Term& t) {
    return each(infer(ctx, t.fun()), [&](const DerivationPtr& f) {
      Term pi = nf(f->type());
      if (!pi.is(Kind::Pi)) {
        throw TypeError(TypeErrorKind::NotAFunction,
                        format_term(t.fun()) + " is applied but has type " + format_term(f->type()),
                        t, {}, ctx);
      }
      return each(check(ctx, t.arg(), pi.domain()), [&](const DerivationPtr& a) -> Derivations {
        Term type = nf(substitute(pi.codomain(), pi.binder(), elaborate_unchecked(*a)));
        return {make_derivation(Rule::PiE, {ctx, t, type}, {f, a})};
      });
    });
  }

  Derivations infer_projection(const Context& ctx, const Term& t) {
    const bool first = t.is(Kind::Fst);
    return each(infer(ctx, t.pair()), [&](const DerivationPtr& p) -> Derivations {
      Term sigma = nf(p->type());
      if (!sigma.is(Kind::Sigma)) {
        throw TypeError(TypeErrorKind::NotAPair,
                        format_term(t.pair()) + " is projected but has type " + format_term(p->type()),
                        t, {}, ctx);
      }
      if (first) return {make_derivation(Rule::SigE1, {ctx, t, sigma.domain()}, {p})};
      Term type = nf(substitute(sigma.codomain(), sigma.binder(), make_fst(elaborate_unchecked(*p))));
      return {make_derivation(Rule::SigE2, {ctx, t, type}, {p})};
    });
  }

  Derivations infer_let(const Context& ctx, const Term& t) {
    level_of_type(ctx, t.annot());
    Context inner = ctx.extended(t.binder(), t.annot());
    return each(check(ctx, t.def(), t.annot()), [&](const DerivationPtr& m) {
      return each(infer(inner, t.body()), [&](const DerivationPtr& n) -> Derivations {
        Term type = n->type();
        if (occurs_free(t.binder(), type)) type = nf(type);
        if (occurs_free(t.binder(), type)) {
          throw TypeError(TypeErrorKind::ScopeEscape,
                          "let-bound " + t.binder() + " escapes into the type " + format_term(type), t, {},
                          ctx);
        }
        return {make_derivation(Rule::Let, {ctx, t, type}, {m, n})};
      });
    });
  }

  Derivations check_lam(const Context& ctx, const Term& t, const Term& type) {
    Term pi = nf(type);
    if (!pi.is(Kind::Pi)) throw mismatch(ctx, t, type, make_var("a function type"));
    const Term z = make_var(t.binder());
    Context inner = ctx.extended(t.binder(), pi.domain());
    return each(check(inner, t.body(), substitute(pi.codomain(), pi.binder(), z)),
                [&](const DerivationPtr& body) -> Derivations {
                  return {make_derivation(Rule::PiI, {ctx, t, type}, {body})};
                });
  }

  Derivations check_pair(const Context& ctx, const Term& t, const Term& type) {
    Term sigma = nf(type);
    if (!sigma.is(Kind::Sigma)) throw mismatch(ctx, t, type, make_var("a pair type"));
    return each(check(ctx, t.first(), sigma.domain()), [&](const DerivationPtr& m) {
      Term second = nf(substitute(sigma.codomain(), sigma.binder(), elaborate_unchecked(*m)));
      return each(check(ctx, t.second(), second), [&](const DerivationPtr& n) -> Derivations {
        return {make_derivation(Rule::SigI, {ctx, t, type}, {m, n})};
      });
    });
  }

  Derivations check_let(const Context& ctx, const Term& t, const Term& type) {
    level_of_type(ctx, t.annot());
    Context inner = ctx.extended(t.binder(), t.annot());
    return each(check(ctx, t.def(), t.annot()), [&](const DerivationPtr& m) {
      return each(check(inner, t.body(), type), [&](const DerivationPtr& n) -> Derivations {
        return {make_derivation(Rule::Let, {ctx, t, type}, {m, n})};
      });
    });
  }

  // require x : A in N. `body_derivations` types [M/x]N for each witness M;
  // `type`, when given, is the type being checked against.
  template <class F>
  Derivations with_require(const Context& ctx, const Term& t, F body_derivations, const Term& type = {}) {
    level_of_type(ctx, t.goal());
    std::vector<Solution> solutions = solve(sig_, ctx, t.goal(), cfg_);
    if (solutions.empty()) {
      throw TypeError(TypeErrorKind::UnresolvedPresupposition,
                      "unresolved presupposition: " + format_term(t.goal()), t, t.goal(), ctx);
    }
    return each(solutions, [&](const Solution& sol) {
      Term body = substitute(t.body(), t.binder(), sol.witness);
      return each(body_derivations(body), [&](const DerivationPtr& b) -> Derivations {
        Term result = type ? type : b->type();
        if (occurs_free(t.binder(), result)) {
          throw TypeError(TypeErrorKind::ScopeEscape, "require-bound " + t.binder() + " escapes", t, {}, ctx);
        }
        return {make_derivation(Rule::Require, {ctx, t, result}, {sol.derivation, b}, sol.witness)};
      });
    });
  }

  const Signature& sig_;
  const CheckConfig& cfg_;
};

Derivations dedup(Derivations ds, std::size_t cap) {
  struct Key {
    std::vector<Term> witnesses;
    Term type;
  };
  std::vector<Key> seen;
  Derivations out;
  for (auto& d : ds) {
    Key k{witnesses(*d), d->type()};
    bool dup = std::any_of(seen.begin(), seen.end(), [&](const Key& s) {
      return s.witnesses.size() == k.witnesses.size() && alpha_eq(s.type, k.type) &&
             std::equal(s.witnesses.begin(), s.witnesses.end(), k.witnesses.begin(), alpha_eq);
    });
    if (dup) continue;
    seen.push_back(std::move(k));
    out.push_back(std::move(d));
    if (out.size() >= cap) break;
  }
  return out;
}

void check_entries(const Signature& sig, const Telescope& entries, bool is_context,
                   const CheckConfig& cfg) {
  Signature prefix_sig;
  Context prefix_ctx;
  for (const auto& entry : entries.entries()) {
    const bool clash = is_context ? (prefix_ctx.contains(entry.name) || sig.contains(entry.name))
                                  : prefix_sig.contains(entry.name);
    if (clash) {
      throw TypeError(TypeErrorKind::DuplicateName, "duplicate name " + entry.name, make_var(entry.name));
    }
    try {
      Checker checker(is_context ? sig : prefix_sig, cfg);
      checker.level_of_type(prefix_ctx, entry.type);
    } catch (const TypeError& e) {
      if (e.kind() == TypeErrorKind::BudgetExceeded) throw;
      throw TypeError(TypeErrorKind::IllTypedEntry, "ill-typed entry " + entry.name + ": " + e.what(),
                      make_var(entry.name));
    }
    if (is_context) {
      prefix_ctx.push_back(entry);
    } else {
      prefix_sig.push_back(entry);
    }
  }
}

} // namespace

void check_signature(const Signature& sig, const CheckConfig& cfg) { check_entries(sig, sig, false, cfg); }

void check_context(const Signature& sig, const Context& ctx, const CheckConfig& cfg) {
  check_entries(sig, ctx, true, cfg);
}

bool convertible(const Term& a, const Term& b, std::size_t step_budget) {
  return alpha_eq(normalize(a, step_budget), normalize(b, step_budget));
}

std::vector<DerivationPtr> infer_all(const Signature& sig, const Context& ctx, const Term& t,
                                     const CheckConfig& cfg) {
  cfg.validate();
  Checker checker(sig, cfg);
  return dedup(checker.infer(ctx, t), cfg.max_total_derivations);
}

std::vector<DerivationPtr> check_all(const Signature& sig, const Context& ctx, const Term& t,
                                     const Term& type, const CheckConfig& cfg) {
  cfg.validate();
  Checker checker(sig, cfg);
  checker.level_of_type(ctx, type);
  return dedup(checker.check(ctx, t, type), cfg.max_total_derivations);
}

std::uint32_t type_level(const Signature& sig, const Context& ctx, const Term& type, const CheckConfig& cfg) {
  cfg.validate();
  return Checker(sig, cfg).level_of_type(ctx, type);
}

} // namespace presup
