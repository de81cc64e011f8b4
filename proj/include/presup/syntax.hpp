#pragma once

#include <string>
#include <string_view>

#include "presup/term.hpp"

namespace presup {

// Concrete syntax:
//
//   Set0, Set1, ...   (Set alone means Set0)
//   (x : A) -> B      A -> B
//   (x : A) * B       A * B
//   \x. M             \x y. M
//   M N               application, left-associative
//   <M, N>   fst M   snd M
//   require x : A in M
//   let x : A = M in N
//
// -> and * associate to the right, * binds tighter than ->, and binders
// extend as far right as possible. Free identifiers naming an entry of `sig`
// become constants; every other identifier is a variable.
Term parse_term(std::string_view text, const Signature& sig);

// Resolves constants against the base signature.
Term parse_term(std::string_view text);

// Minimal-parenthesis rendering that parse_term reads back alpha-equal. The
// body of a dependent pair type that is itself a plain product is
// parenthesized, so right-nested tuples read as (x : E) * (P x * Q x).
std::string format_term(const Term& t);

} // namespace presup
