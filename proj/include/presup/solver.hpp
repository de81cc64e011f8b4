#pragma once

#include <utility>
#include <vector>

#include "presup/derivation.hpp"
#include "presup/typechecker.hpp"

namespace presup {

// A witness for a presupposition goal together with its derivation.
struct Solution {
  Term witness;
  DerivationPtr derivation;
};

// A projection spine: a hypothesis or constant under a chain of fst/snd.
struct Spine {
  Term term;
  Term type;  // normalized
  DerivationPtr derivation;
};

// Every spine with path length <= depth. Heads run over the context newest
// first, then the signature oldest first; for each head, paths come out
// breadth first and only descend through Sigma types.
std::vector<Spine> spines(const Signature& sig, const Context& ctx, std::size_t depth,
                          std::size_t step_budget = 100000);

// (term, normalized type) view of spines().
std::vector<std::pair<Term, Term>> enumerate_spines(const Signature& sig, const Context& ctx,
                                                    std::size_t depth);

// Spines whose type is convertible with `goal`, in enumeration order,
// deduplicated and cut at cfg.max_solutions_per_require. An empty result
// means the presupposition is unresolved.
std::vector<Solution> solve(const Signature& sig, const Context& ctx, const Term& goal,
                            const CheckConfig& cfg = {});

} // namespace presup
