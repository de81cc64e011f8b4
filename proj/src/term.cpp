#include "presup/term.hpp"

#include <cassert>
#include <stdexcept>

namespace presup {

namespace {

// Index of the child a binding form's binder scopes over.
std::size_t scope_index(Kind k) {
  switch (k) {
    case Kind::Pi:
    case Kind::Sigma:
    case Kind::Require:
      return 1;
    case Kind::Lam:
      return 0;
    case Kind::Let:
      return 2;
    default:
      return 3;
  }
}

Term subst_rec(const Term& t, const std::string& var, const Term& value,
               const std::set<std::string>& value_fv) {
  switch (t.kind()) {
    case Kind::Var:
      return t.name() == var ? value : t;
    case Kind::Const:
    case Kind::Universe:
      return t;
    default:
      break;
  }
  if (!occurs_free(var, t)) return t;

  std::array<Term, 3> kids{};
  const std::size_t scoped = scope_index(t.kind());
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i != scoped) kids[i] = subst_rec(t.child(i), var, value, value_fv);
  }
  if (scoped >= t.arity()) return t.with_children(kids);

  const Term& inner = t.child(scoped);
  if (t.binder() == var) {
    kids[scoped] = inner;
    return t.with_children(kids);
  }
  if (value_fv.count(t.binder()) != 0 && occurs_free(var, inner)) {
    const std::string renamed = fresh_name(t.binder(), [&](const std::string& n) {
      return n == var || value_fv.count(n) != 0 || occurs_free(n, inner);
    });
    kids[scoped] = subst_rec(subst_rec(inner, t.binder(), make_var(renamed), {renamed}), var,
                             value, value_fv);
    return t.with_binder(renamed, kids);
  }
  kids[scoped] = subst_rec(inner, var, value, value_fv);
  return t.with_children(kids);
}

void collect_free(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case Kind::Var:
      for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
        if (*it == t.name()) return;
      }
      out.insert(t.name());
      return;
    case Kind::Const:
    case Kind::Universe:
      return;
    default:
      break;
  }
  const std::size_t scoped = scope_index(t.kind());
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i == scoped) {
      bound.push_back(t.binder());
      collect_free(t.child(i), bound, out);
      bound.pop_back();
    } else {
      collect_free(t.child(i), bound, out);
    }
  }
}

// Position of `name` counted from the innermost binder, if bound.
std::optional<std::size_t> bound_index(const std::vector<std::string>& env, const std::string& name) {
  for (std::size_t i = env.size(); i-- > 0;) {
    if (env[i] == name) return env.size() - 1 - i;
  }
  return std::nullopt;
}

bool alpha_rec(const Term& a, const Term& b, std::vector<std::string>& env_a,
               std::vector<std::string>& env_b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Var: {
      auto ia = bound_index(env_a, a.name());
      auto ib = bound_index(env_b, b.name());
      if (ia || ib) return ia == ib;
      return a.name() == b.name();
    }
    case Kind::Const:
      return a.name() == b.name();
    case Kind::Universe:
      return a.level() == b.level();
    default:
      break;
  }
  const std::size_t scoped = scope_index(a.kind());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    bool ok;
    if (i == scoped) {
      env_a.push_back(a.binder());
      env_b.push_back(b.binder());
      ok = alpha_rec(a.child(i), b.child(i), env_a, env_b);
      env_a.pop_back();
      env_b.pop_back();
    } else {
      ok = alpha_rec(a.child(i), b.child(i), env_a, env_b);
    }
    if (!ok) return false;
  }
  return true;
}

} // namespace

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::Var: return "Var";
    case Kind::Const: return "Const";
    case Kind::Universe: return "Universe";
    case Kind::Pi: return "Pi";
    case Kind::Lam: return "Lam";
    case Kind::App: return "App";
    case Kind::Sigma: return "Sigma";
    case Kind::Pair: return "Pair";
    case Kind::Fst: return "Fst";
    case Kind::Snd: return "Snd";
    case Kind::Require: return "Require";
    case Kind::Let: return "Let";
  }
  return "?";
}

const Term& Term::body() const {
  const std::size_t i = scope_index(kind());
  assert(i < arity());
  return node_->kids[i];
}

bool Term::binds() const { return scope_index(kind()) < 3; }

Term Term::make(Kind kind, std::string name, std::uint32_t level, std::uint8_t arity,
                std::array<Term, 3> kids) {
  for (std::uint8_t i = 0; i < arity; ++i) {
    if (!kids[i]) throw std::invalid_argument(std::string("null child in ") + kind_name(kind));
  }
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->level = level;
  node->arity = arity;
  node->name = std::move(name);
  node->kids = std::move(kids);
  return Term(std::move(node));
}

Term Term::with_children(std::array<Term, 3> kids) const {
  return make(kind(), name(), level(), node_->arity, std::move(kids));
}

Term Term::with_binder(std::string binder, std::array<Term, 3> kids) const {
  return make(kind(), std::move(binder), level(), node_->arity, std::move(kids));
}

Term make_var(std::string name) { return Term::make(Kind::Var, std::move(name), 0, 0, {}); }
Term make_const(std::string name) { return Term::make(Kind::Const, std::move(name), 0, 0, {}); }
Term make_universe(std::uint32_t level) { return Term::make(Kind::Universe, "", level, 0, {}); }

Term make_pi(std::string binder, Term domain, Term codomain) {
  return Term::make(Kind::Pi, std::move(binder), 0, 2, {std::move(domain), std::move(codomain), {}});
}

Term make_lam(std::string binder, Term body) {
  return Term::make(Kind::Lam, std::move(binder), 0, 1, {std::move(body), {}, {}});
}

Term make_app(Term fun, Term arg) {
  return Term::make(Kind::App, "", 0, 2, {std::move(fun), std::move(arg), {}});
}

Term make_sigma(std::string binder, Term domain, Term codomain) {
  return Term::make(Kind::Sigma, std::move(binder), 0, 2,
                    {std::move(domain), std::move(codomain), {}});
}

Term make_pair(Term first, Term second) {
  return Term::make(Kind::Pair, "", 0, 2, {std::move(first), std::move(second), {}});
}

Term make_fst(Term pair) { return Term::make(Kind::Fst, "", 0, 1, {std::move(pair), {}, {}}); }
Term make_snd(Term pair) { return Term::make(Kind::Snd, "", 0, 1, {std::move(pair), {}, {}}); }

Term make_require(std::string binder, Term goal, Term body) {
  return Term::make(Kind::Require, std::move(binder), 0, 2, {std::move(goal), std::move(body), {}});
}

Term make_let(std::string binder, Term annot, Term def, Term body) {
  return Term::make(Kind::Let, std::move(binder), 0, 3,
                    {std::move(annot), std::move(def), std::move(body)});
}

Term make_apps(Term fun, std::initializer_list<Term> args) {
  for (const auto& a : args) fun = make_app(std::move(fun), a);
  return fun;
}

Term make_arrow(Term domain, Term codomain) {
  auto binder = fresh_name("_", [&](const std::string& n) { return occurs_free(n, codomain); });
  return make_pi(std::move(binder), std::move(domain), std::move(codomain));
}

Term make_product(Term left, Term right) {
  auto binder = fresh_name("_", [&](const std::string& n) { return occurs_free(n, right); });
  return make_sigma(std::move(binder), std::move(left), std::move(right));
}

Term substitute(const Term& body, const std::string& var, const Term& value) {
  return subst_rec(body, var, value, free_vars(value));
}

bool alpha_eq(const Term& a, const Term& b) {
  std::vector<std::string> env_a, env_b;
  return alpha_rec(a, b, env_a, env_b);
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(t, bound, out);
  return out;
}

bool occurs_free(const std::string& var, const Term& t) {
  switch (t.kind()) {
    case Kind::Var:
      return t.name() == var;
    case Kind::Const:
    case Kind::Universe:
      return false;
    default:
      break;
  }
  const std::size_t scoped = scope_index(t.kind());
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i == scoped && t.binder() == var) continue;
    if (occurs_free(var, t.child(i))) return true;
  }
  return false;
}

Term nested_proj(const Term& t, unsigned i) {
  if (i == 0) throw std::invalid_argument("nested_proj: index starts at 1");
  Term cur = t;
  for (unsigned k = 1; k < i; ++k) cur = make_snd(cur);
  return make_fst(cur);
}

bool contains_require(const Term& t) {
  if (t.is(Kind::Require)) return true;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (contains_require(t.child(i))) return true;
  }
  return false;
}

const Term* Telescope::lookup(std::string_view name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->name == name) return &it->type;
  }
  return nullptr;
}

bool same_telescope(const Telescope& a, const Telescope& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name || !alpha_eq(a[i].type, b[i].type)) return false;
  }
  return true;
}

} // namespace presup
