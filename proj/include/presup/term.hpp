#pragma once

// Kernel syntax: terms, signatures, contexts and the syntactic operations
// (substitution, alpha-equivalence, free variables) everything else uses.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace presup {

enum class Kind : std::uint8_t {
  Var,
  Const,
  Universe,
  Pi,
  Lam,
  App,
  Sigma,
  Pair,
  Fst,
  Snd,
  Require,
  Let,
};

const char* kind_name(Kind kind);

// Immutable, shared term handle. Copying a Term copies a pointer.
//
// Child layout by kind:
//   Pi, Sigma   domain, codomain      (binder scopes over codomain)
//   Lam         body                  (binder scopes over body)
//   App         fun, arg
//   Pair        first, second
//   Fst, Snd    pair
//   Require     goal, body            (binder scopes over body)
//   Let         annot, def, body      (binder scopes over body)
class Term {
public:
  Term() = default;

  explicit operator bool() const { return node_ != nullptr; }

  Kind kind() const;
  bool is(Kind k) const;

  // Variable/constant name, or the binder of a binding form.
  const std::string& name() const;
  const std::string& binder() const { return name(); }
  std::uint32_t level() const;

  std::size_t arity() const;
  const Term& child(std::size_t i) const;

  const Term& domain() const { return child(0); }
  const Term& codomain() const { return child(1); }
  const Term& fun() const { return child(0); }
  const Term& arg() const { return child(1); }
  const Term& first() const { return child(0); }
  const Term& second() const { return child(1); }
  const Term& pair() const { return child(0); }
  const Term& goal() const { return child(0); }
  const Term& annot() const { return child(0); }
  const Term& def() const { return child(1); }
  const Term& body() const;

  // True for Pi, Sigma, Lam, Require and Let.
  bool binds() const;

  // Rebuilds this node with new children (and optionally a new binder),
  // keeping kind, name and level.
  Term with_children(std::array<Term, 3> kids) const;
  Term with_binder(std::string binder, std::array<Term, 3> kids) const;

private:
  struct Node;

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Kind kind, std::string name, std::uint32_t level, std::uint8_t arity,
                   std::array<Term, 3> kids);

  friend Term make_var(std::string);
  friend Term make_const(std::string);
  friend Term make_universe(std::uint32_t);
  friend Term make_pi(std::string, Term, Term);
  friend Term make_lam(std::string, Term);
  friend Term make_app(Term, Term);
  friend Term make_sigma(std::string, Term, Term);
  friend Term make_pair(Term, Term);
  friend Term make_fst(Term);
  friend Term make_snd(Term);
  friend Term make_require(std::string, Term, Term);
  friend Term make_let(std::string, Term, Term, Term);

  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  std::uint32_t level = 0;
  std::uint8_t arity = 0;
  std::string name;
  std::array<Term, 3> kids;
};

inline Kind Term::kind() const { return node_->kind; }
inline bool Term::is(Kind k) const { return node_ && node_->kind == k; }
inline const std::string& Term::name() const { return node_->name; }
inline std::uint32_t Term::level() const { return node_->level; }
inline std::size_t Term::arity() const { return node_->arity; }
inline const Term& Term::child(std::size_t i) const { return node_->kids[i]; }

Term make_var(std::string name);
Term make_const(std::string name);
Term make_universe(std::uint32_t level);
Term make_pi(std::string binder, Term domain, Term codomain);
Term make_lam(std::string binder, Term body);
Term make_app(Term fun, Term arg);
Term make_sigma(std::string binder, Term domain, Term codomain);
Term make_pair(Term first, Term second);
Term make_fst(Term pair);
Term make_snd(Term pair);
Term make_require(std::string binder, Term goal, Term body);
Term make_let(std::string binder, Term annot, Term def, Term body);

// Left-nested application f a1 a2 ...
Term make_apps(Term fun, std::initializer_list<Term> args);
// Non-dependent A -> B and A * B. The binder is chosen not free in B.
Term make_arrow(Term domain, Term codomain);
Term make_product(Term left, Term right);

// [value/var]body, capture-avoiding. Bound variables that would capture a
// free variable of `value` are renamed by priming.
Term substitute(const Term& body, const std::string& var, const Term& value);

bool alpha_eq(const Term& a, const Term& b);

std::set<std::string> free_vars(const Term& t);
bool occurs_free(const std::string& var, const Term& t);

// fst (snd^(i-1) t). Requires i >= 1.
Term nested_proj(const Term& t, unsigned i);

bool contains_require(const Term& t);

// `base` primed until `taken` rejects it.
template <class Pred>
std::string fresh_name(std::string base, Pred taken) {
  if (base.empty()) base = "x";
  while (taken(base)) base += '\'';
  return base;
}

struct Binding {
  std::string name;
  Term type;
};

// Ordered telescope of named, typed entries.
class Telescope {
public:
  Telescope() = default;
  Telescope(std::initializer_list<Binding> entries) : entries_(entries) {}

  const std::vector<Binding>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Binding& operator[](std::size_t i) const { return entries_[i]; }

  const Term* lookup(std::string_view name) const;
  bool contains(std::string_view name) const { return lookup(name) != nullptr; }

  void push_back(Binding b) { entries_.push_back(std::move(b)); }

private:
  std::vector<Binding> entries_;
};

// Lexical constants (the Σ of a judgment).
class Signature : public Telescope {
public:
  using Telescope::Telescope;
};

// Local hypotheses (the Γ of a judgment).
class Context : public Telescope {
public:
  using Telescope::Telescope;

  Context extended(std::string name, Term type) const {
    Context c = *this;
    c.push_back({std::move(name), std::move(type)});
    return c;
  }
};

// Entry names and types agree pairwise (types up to alpha).
bool same_telescope(const Telescope& a, const Telescope& b);

} // namespace presup
