#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "presup/term.hpp"

namespace presup {

// E : Set0, the one-place predicates Man, WalkedIn, SatDown, Farmer, Donkey
// and the relations Owns, Beats.
const Signature& base_signature();

enum class Category { Det, N, VP, TV, Pron, Cond, Seq, Rel };

const char* category_name(Category c);

struct LexEntry {
  std::string surface;
  Category category;
  Term meaning;
  Term meaning_type;
};

// Throws UnknownWord outside the closed lexicon. Lookup is case-insensitive.
const LexEntry& entry(std::string_view word);

// Every entry, in a fixed order.
const std::vector<LexEntry>& lexicon();

// A require under the leading lambdas of a meaning turns into one more
// lambda, and its goal into one more Pi in the type:
//
//   \P. require x : E in require p : P x in x   :  (E -> Set0) -> E
//   \P. \x. \p. x                               :  (P : E -> Set0) -> (x : E) -> P x -> E
//
// The result is what the entry means once its presuppositions are handed in
// as arguments, so it can be checked without any context to search.
std::pair<Term, Term> abstract_presuppositions(const Term& meaning, const Term& type);

// The three-argument definite article \P. \x. \q. x, before presuppositions
// were made explicit with require.
Term the_sketch();

} // namespace presup
