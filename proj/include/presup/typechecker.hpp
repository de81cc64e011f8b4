#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "presup/derivation.hpp"
#include "presup/error.hpp"
#include "presup/term.hpp"

namespace presup {

enum class TypeErrorKind {
  DuplicateName,
  IllTypedEntry,
  CannotInfer,
  UnboundName,
  NotAFunction,
  NotAPair,
  NotAType,
  TypeMismatch,
  ScopeEscape,
  PresuppositionInType,
  UnresolvedPresupposition,
  BudgetExceeded,
  InvalidDerivation,
};

const char* type_error_name(TypeErrorKind kind);

class TypeError : public Error {
public:
  TypeError(TypeErrorKind kind, const std::string& what, Term subject = {}, Term goal = {},
            Context ctx = {})
      : Error(what), kind_(kind), subject_(std::move(subject)), goal_(std::move(goal)),
        ctx_(std::move(ctx)) {}

  TypeErrorKind kind() const { return kind_; }
  // The offending subterm, when there is one.
  const Term& subject() const { return subject_; }
  // For UnresolvedPresupposition: the goal type nobody could witness.
  const Term& goal() const { return goal_; }
  const Context& ctx() const { return ctx_; }

private:
  TypeErrorKind kind_;
  Term subject_;
  Term goal_;
  Context ctx_;
};

struct CheckConfig {
  std::size_t solver_depth = 8;
  std::size_t max_solutions_per_require = 16;
  std::size_t max_total_derivations = 256;
  std::size_t step_budget = 100000;

  // Throws std::invalid_argument unless every bound is positive.
  void validate() const;
};

void check_signature(const Signature& sig, const CheckConfig& cfg = {});
void check_context(const Signature& sig, const Context& ctx, const CheckConfig& cfg = {});

// normalize(a) alpha-equals normalize(b).
bool convertible(const Term& a, const Term& b, std::size_t step_budget = 100000);

// All derivations of Γ ⊢ t : A for some A, one per distinct assignment of
// require witnesses (deduplicated on witnesses and type), in solver order.
std::vector<DerivationPtr> infer_all(const Signature& sig, const Context& ctx, const Term& t,
                                     const CheckConfig& cfg = {});

// All derivations of Γ ⊢ t : type.
std::vector<DerivationPtr> check_all(const Signature& sig, const Context& ctx, const Term& t,
                                     const Term& type, const CheckConfig& cfg = {});

// The universe level of a type's type, i.e. i such that Γ ⊢ type : Set_i.
std::uint32_t type_level(const Signature& sig, const Context& ctx, const Term& type,
                         const CheckConfig& cfg = {});

} // namespace presup
