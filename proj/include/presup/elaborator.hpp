#pragma once

#include <utility>
#include <vector>

#include "presup/derivation.hpp"
#include "presup/typechecker.hpp"

namespace presup {

// Replaces every require in the derivation's subject by the witness its
// Require node chose. Throws TypeError(InvalidDerivation) if the derivation
// does not re-validate. The result is require-free.
Term elaborate(const Signature& sig, const Derivation& d, std::size_t step_budget = 100000);

// The same structural map without re-validation. The typechecker uses it to
// resolve the subterms that flow into dependent types.
Term elaborate_unchecked(const Derivation& d);

struct Elaboration {
  Term term;
  Term type;
  DerivationPtr derivation;
};

// infer_all followed by elaborate on each derivation, in the same order.
std::vector<Elaboration> elaborate_all(const Signature& sig, const Context& ctx, const Term& t,
                                       const CheckConfig& cfg = {});

} // namespace presup
