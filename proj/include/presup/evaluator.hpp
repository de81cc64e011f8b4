#pragma once

#include <cstddef>

#include "presup/error.hpp"
#include "presup/term.hpp"

namespace presup {

inline constexpr std::size_t default_step_budget = 100000;

// Big-step evaluation of a closed term to canonical form. Application and
// let substitute unevaluated arguments; projections force the pair first.
// Throws EvalError: StuckTerm on a projection of a non-pair, an application
// of a non-function, or any variable or constant; UnresolvedRequire when a
// require reaches evaluation position; NonTermination past `step_budget`.
Term eval_closed(const Term& t, std::size_t step_budget = default_step_budget);

// Full beta normal form, reducing under binders. Variables, constants and
// require expressions are neutral; a require keeps its node and has its goal
// and body normalized in place. Constants carry no definitions, so no
// signature or context is consulted.
Term normalize(const Term& t, std::size_t step_budget = default_step_budget);

// A term is canonical when it is a universe, Pi, Sigma, lambda or pair.
bool is_canonical(const Term& t);

} // namespace presup
