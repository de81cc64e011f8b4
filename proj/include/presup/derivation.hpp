#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "presup/term.hpp"

namespace presup {

enum class Rule {
  Const,
  Hyp,
  Cumulativity,
  PiF,
  PiI,
  PiE,
  SigF,
  SigI,
  SigE1,
  SigE2,
  Require,
  Let,
  Conv,
};

const char* rule_name(Rule rule);

// Γ ⊢ subject : type. The signature is fixed for a whole derivation and is
// passed alongside rather than stored in every node.
struct Judgment {
  Context ctx;
  Term subject;
  Term type;
};

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

// Premise order per rule:
//   PiF, SigF   domain : Set_i, codomain : Set_j (context extended by one)
//   PiI         body (context extended by one)
//   PiE         function, argument
//   SigI        first, second
//   SigE1/2     pair
//   Require     witness : goal, [witness/x]body : type
//   Let         definition : annot, body (context extended by one)
//   Conv        the same subject at a computationally equal type
struct Derivation {
  Rule rule;
  Judgment conclusion;
  std::vector<DerivationPtr> premises;
  Term witness;  // set iff rule == Require

  const Term& subject() const { return conclusion.subject; }
  const Term& type() const { return conclusion.type; }
  const Context& ctx() const { return conclusion.ctx; }
};

DerivationPtr make_derivation(Rule rule, Judgment conclusion, std::vector<DerivationPtr> premises = {},
                              Term witness = {});

// Require witnesses in pre-order.
std::vector<Term> witnesses(const Derivation& d);

// Re-checks every node against the shape of its rule. Returns a description
// of the first offending node, or nullopt when the derivation is valid.
std::optional<std::string> find_invalid(const Signature& sig, const Derivation& d,
                                        std::size_t step_budget = 100000);

// {rule, ctx, term, type, witness?, premises[]} with terms in concrete syntax.
// Keys come out sorted, so the text is stable.
std::string derivation_to_json(const Derivation& d, int indent = 2);

} // namespace presup
