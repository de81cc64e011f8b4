#include "presup/derivation.hpp"

#include <algorithm>

#include "json.hpp"
#include "presup/elaborator.hpp"
#include "presup/evaluator.hpp"
#include "presup/syntax.hpp"

namespace presup {

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::Const: return "Const";
    case Rule::Hyp: return "Hyp";
    case Rule::Cumulativity: return "Cumulativity";
    case Rule::PiF: return "PiF";
    case Rule::PiI: return "PiI";
    case Rule::PiE: return "PiE";
    case Rule::SigF: return "SigF";
    case Rule::SigI: return "SigI";
    case Rule::SigE1: return "SigE1";
    case Rule::SigE2: return "SigE2";
    case Rule::Require: return "Require";
    case Rule::Let: return "Let";
    case Rule::Conv: return "Conv";
  }
  return "?";
}

DerivationPtr make_derivation(Rule rule, Judgment conclusion, std::vector<DerivationPtr> premises,
                              Term witness) {
  return std::make_shared<const Derivation>(
      Derivation{rule, std::move(conclusion), std::move(premises), std::move(witness)});
}

namespace {

void collect_witnesses(const Derivation& d, std::vector<Term>& out) {
  if (d.rule == Rule::Require) out.push_back(d.witness);
  for (const auto& p : d.premises) collect_witnesses(*p, out);
}

// Shape checks for a single node; premises are validated separately.
class NodeValidator {
public:
  NodeValidator(const Signature& sig, std::size_t budget) : sig_(sig), budget_(budget) {}

  std::optional<std::string> check(const Derivation& d) {
    for (const auto& p : d.premises) {
      if (!p) return fail(d, "null premise");
      if (auto bad = check(*p)) return bad;
    }
    try {
      return check_node(d);
    } catch (const Error& e) {
      return fail(d, e.what());
    }
  }

private:
  Term nf(const Term& t) const { return normalize(t, budget_); }
  bool conv(const Term& a, const Term& b) const { return alpha_eq(nf(a), nf(b)); }

  std::optional<std::uint32_t> universe_level(const Term& type) const {
    Term t = nf(type);
    if (!t.is(Kind::Universe)) return std::nullopt;
    return t.level();
  }

  static std::optional<std::string> fail(const Derivation& d, const std::string& why) {
    return std::string(rule_name(d.rule)) + " node for " + format_term(d.subject()) + ": " + why;
  }

  bool fresh_in(const Context& ctx, const std::string& name) const {
    return !ctx.contains(name) && !sig_.contains(name);
  }

  // premise context = ctx, (name : type) for some fresh name; returns it.
  std::optional<std::string> extension(const Context& ctx, const Derivation& premise,
                                       const Term& type) const {
    const Context& pc = premise.ctx();
    if (pc.size() != ctx.size() + 1) return std::nullopt;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (pc[i].name != ctx[i].name || !alpha_eq(pc[i].type, ctx[i].type)) return std::nullopt;
    }
    const Binding& last = pc.entries().back();
    if (!fresh_in(ctx, last.name) || !alpha_eq(last.type, type)) return std::nullopt;
    return last.name;
  }

  std::optional<std::string> expect_premises(const Derivation& d, std::size_t n) const {
    if (d.premises.size() != n) {
      return fail(d, "expected " + std::to_string(n) + " premises, found " +
                         std::to_string(d.premises.size()));
    }
    return std::nullopt;
  }

  std::optional<std::string> check_node(const Derivation& d) const {
    const Term& s = d.subject();
    const Context& ctx = d.ctx();
    if (d.rule != Rule::Require && d.witness) return fail(d, "witness on a non-require node");
    auto same_ctx = [&](std::size_t i) { return same_telescope(d.premises[i]->ctx(), ctx); };

    switch (d.rule) {
      case Rule::Const: {
        if (auto bad = expect_premises(d, 0)) return bad;
        if (!s.is(Kind::Const)) return fail(d, "subject is not a constant");
        const Term* t = sig_.lookup(s.name());
        if (!t || !alpha_eq(*t, d.type())) return fail(d, "type differs from the signature");
        return std::nullopt;
      }
      case Rule::Hyp: {
        if (auto bad = expect_premises(d, 0)) return bad;
        if (!s.is(Kind::Var)) return fail(d, "subject is not a variable");
        const Term* t = ctx.lookup(s.name());
        if (!t || !alpha_eq(*t, d.type())) return fail(d, "type differs from the context");
        return std::nullopt;
      }
      case Rule::Cumulativity: {
        if (auto bad = expect_premises(d, 0)) return bad;
        auto j = universe_level(d.type());
        if (!s.is(Kind::Universe) || !j || !(s.level() < *j)) return fail(d, "needs Set_i : Set_j, i < j");
        return std::nullopt;
      }
      case Rule::PiF:
      case Rule::SigF: {
        if (auto bad = expect_premises(d, 2)) return bad;
        if (!s.is(d.rule == Rule::PiF ? Kind::Pi : Kind::Sigma)) return fail(d, "subject shape");
        const Derivation& dom = *d.premises[0];
        const Derivation& cod = *d.premises[1];
        if (!same_ctx(0) || !alpha_eq(dom.subject(), s.domain())) return fail(d, "domain premise");
        auto i = universe_level(dom.type());
        auto name = extension(ctx, cod, elaborate_unchecked(dom));
        if (!i || !name) return fail(d, "domain is not a type in this context");
        if (!alpha_eq(cod.subject(), substitute(s.codomain(), s.binder(), make_var(*name)))) {
          return fail(d, "codomain premise subject");
        }
        auto j = universe_level(cod.type());
        auto k = universe_level(d.type());
        if (!j || !k || *k != std::max(*i, *j)) return fail(d, "level is not the max of the parts");
        return std::nullopt;
      }
      case Rule::PiI: {
        if (auto bad = expect_premises(d, 1)) return bad;
        Term pi = nf(d.type());
        if (!s.is(Kind::Lam) || !pi.is(Kind::Pi)) return fail(d, "needs a lambda at a Pi type");
        const Derivation& body = *d.premises[0];
        auto name = extension(ctx, body, pi.domain());
        if (!name) return fail(d, "body context");
        Term z = make_var(*name);
        if (!alpha_eq(body.subject(), substitute(s.body(), s.binder(), z)) ||
            !conv(body.type(), substitute(pi.codomain(), pi.binder(), z))) {
          return fail(d, "body premise");
        }
        return std::nullopt;
      }
      case Rule::PiE: {
        if (auto bad = expect_premises(d, 2)) return bad;
        if (!s.is(Kind::App) || !same_ctx(0) || !same_ctx(1)) return fail(d, "subject or context");
        const Derivation& f = *d.premises[0];
        const Derivation& a = *d.premises[1];
        Term pi = nf(f.type());
        if (!pi.is(Kind::Pi) || !alpha_eq(f.subject(), s.fun()) || !alpha_eq(a.subject(), s.arg())) {
          return fail(d, "premise subjects");
        }
        if (!conv(a.type(), pi.domain())) return fail(d, "argument type");
        if (!conv(d.type(), substitute(pi.codomain(), pi.binder(), elaborate_unchecked(a)))) {
          return fail(d, "result type");
        }
        return std::nullopt;
      }
      case Rule::SigI: {
        if (auto bad = expect_premises(d, 2)) return bad;
        Term sigma = nf(d.type());
        if (!s.is(Kind::Pair) || !sigma.is(Kind::Sigma) || !same_ctx(0) || !same_ctx(1)) {
          return fail(d, "needs a pair at a Sigma type");
        }
        const Derivation& m = *d.premises[0];
        const Derivation& n = *d.premises[1];
        if (!alpha_eq(m.subject(), s.first()) || !conv(m.type(), sigma.domain())) return fail(d, "first");
        if (!alpha_eq(n.subject(), s.second()) ||
            !conv(n.type(), substitute(sigma.codomain(), sigma.binder(), elaborate_unchecked(m)))) {
          return fail(d, "second");
        }
        return std::nullopt;
      }
      case Rule::SigE1:
      case Rule::SigE2: {
        if (auto bad = expect_premises(d, 1)) return bad;
        const Derivation& p = *d.premises[0];
        Term sigma = nf(p.type());
        if (!s.is(d.rule == Rule::SigE1 ? Kind::Fst : Kind::Snd) || !sigma.is(Kind::Sigma) ||
            !same_ctx(0) || !alpha_eq(p.subject(), s.pair())) {
          return fail(d, "needs a projection of a Sigma");
        }
        Term expected = d.rule == Rule::SigE1
                            ? sigma.domain()
                            : substitute(sigma.codomain(), sigma.binder(), make_fst(elaborate_unchecked(p)));
        if (!conv(d.type(), expected)) return fail(d, "projection type");
        return std::nullopt;
      }
      case Rule::Require: {
        if (auto bad = expect_premises(d, 2)) return bad;
        if (!s.is(Kind::Require) || !d.witness) return fail(d, "needs a require with a witness");
        if (contains_require(d.witness)) return fail(d, "witness contains a require");
        const Derivation& w = *d.premises[0];
        const Derivation& b = *d.premises[1];
        if (!same_ctx(0) || !same_ctx(1)) return fail(d, "premise contexts");
        if (!alpha_eq(w.subject(), d.witness) || !conv(w.type(), s.goal())) return fail(d, "witness premise");
        if (!alpha_eq(b.subject(), substitute(s.body(), s.binder(), d.witness)) ||
            !conv(b.type(), d.type())) {
          return fail(d, "body premise");
        }
        if (occurs_free(s.binder(), d.type())) return fail(d, "binder escapes into the type");
        return std::nullopt;
      }
      case Rule::Let: {
        if (auto bad = expect_premises(d, 2)) return bad;
        if (!s.is(Kind::Let) || !same_ctx(0)) return fail(d, "needs a let");
        const Derivation& m = *d.premises[0];
        const Derivation& n = *d.premises[1];
        if (!alpha_eq(m.subject(), s.def()) || !conv(m.type(), s.annot())) return fail(d, "definition");
        auto name = extension(ctx, n, s.annot());
        if (!name) return fail(d, "body context");
        if (!alpha_eq(n.subject(), substitute(s.body(), s.binder(), make_var(*name))) ||
            !conv(n.type(), d.type())) {
          return fail(d, "body premise");
        }
        if (occurs_free(*name, d.type())) return fail(d, "binder escapes into the type");
        return std::nullopt;
      }
      case Rule::Conv: {
        if (auto bad = expect_premises(d, 1)) return bad;
        const Derivation& p = *d.premises[0];
        if (!same_ctx(0) || !alpha_eq(p.subject(), s) || !conv(p.type(), d.type())) {
          return fail(d, "types are not computationally equal");
        }
        return std::nullopt;
      }
    }
    return fail(d, "unknown rule");
  }

  const Signature& sig_;
  std::size_t budget_;
};

nlohmann::json to_json(const Derivation& d) {
  nlohmann::json ctx = nlohmann::json::array();
  for (const auto& b : d.ctx().entries()) {
    ctx.push_back({{"name", b.name}, {"type", format_term(b.type)}});
  }
  nlohmann::json premises = nlohmann::json::array();
  for (const auto& p : d.premises) premises.push_back(to_json(*p));
  nlohmann::json node = {
      {"rule", rule_name(d.rule)},
      {"ctx", std::move(ctx)},
      {"term", format_term(d.subject())},
      {"type", format_term(d.type())},
      {"premises", std::move(premises)},
  };
  if (d.witness) node["witness"] = format_term(d.witness);
  return node;
}

} // namespace

std::vector<Term> witnesses(const Derivation& d) {
  std::vector<Term> out;
  collect_witnesses(d, out);
  return out;
}

std::optional<std::string> find_invalid(const Signature& sig, const Derivation& d, std::size_t step_budget) {
  return NodeValidator(sig, step_budget).check(d);
}

std::string derivation_to_json(const Derivation& d, int indent) { return to_json(d).dump(indent); }

} // namespace presup
