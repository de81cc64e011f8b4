#include "presup/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "presup/error.hpp"
#include "presup/syntax.hpp"
#include "presup/typechecker.hpp"

namespace presup {

namespace {

Signature make_base_signature() {
  Signature sig;
  auto add = [&](const char* name, const char* type) { sig.push_back({name, parse_term(type, sig)}); };
  add("E", "Set0");
  add("Man", "E -> Set0");
  add("WalkedIn", "E -> Set0");
  add("SatDown", "E -> Set0");
  add("Farmer", "E -> Set0");
  add("Donkey", "E -> Set0");
  add("Owns", "E -> E -> Set0");
  add("Beats", "E -> E -> Set0");
  return sig;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void check_entry(const LexEntry& e) {
  const Signature& sig = base_signature();
  auto [meaning, type] = abstract_presuppositions(e.meaning, e.meaning_type);
  try {
    if (check_all(sig, {}, meaning, type).empty()) {
      throw std::logic_error("lexical entry '" + e.surface + "' has no derivation");
    }
  } catch (const TypeError& err) {
    throw std::logic_error("lexical entry '" + e.surface + "' is ill-typed: " + err.what());
  }
}

std::vector<LexEntry> make_lexicon() {
  const Signature& sig = base_signature();
  auto term = [&](const char* text) { return parse_term(text, sig); };
  const Term pred = term("E -> Set0");
  const Term rel = term("E -> E -> Set0");
  const Term quant = term("(E -> Set0) -> (E -> Set0) -> Set0");
  const Term pronoun = term("require x : E in x");

  std::vector<LexEntry> lex = {
      {"a", Category::Det, term("\\P Q. (x : E) * P x * Q x"), quant},
      {"the", Category::Det, term("\\P. require x : E in require p : P x in x"), term("(E -> Set0) -> E")},
      {"every", Category::Det, term("\\P Q. (p : (x : E) * P x) -> Q (fst p)"), quant},
      {"if", Category::Cond, term("\\P Q. (p : P) -> Q"), term("Set0 -> Set0 -> Set0")},
      {"he", Category::Pron, pronoun, term("E")},
      {"it", Category::Pron, pronoun, term("E")},
      {"man", Category::N, term("Man"), pred},
      {"farmer", Category::N, term("Farmer"), pred},
      {"donkey", Category::N, term("Donkey"), pred},
      {"walked in", Category::VP, term("WalkedIn"), pred},
      {"sat down", Category::VP, term("SatDown"), pred},
      {"owns", Category::TV, term("Owns"), rel},
      {"beats", Category::TV, term("Beats"), rel},
      {"who", Category::Rel, term("\\P Q x. P x * Q x"), term("(E -> Set0) -> (E -> Set0) -> E -> Set0")},
      {".", Category::Seq, term("\\P Q. (p : P) * Q"), term("Set0 -> Set0 -> Set0")},
  };
  for (const auto& e : lex) check_entry(e);
  return lex;
}

} // namespace

const Signature& base_signature() {
  static const Signature sig = make_base_signature();
  return sig;
}

const char* category_name(Category c) {
  switch (c) {
    case Category::Det: return "Det";
    case Category::N: return "N";
    case Category::VP: return "VP";
    case Category::TV: return "TV";
    case Category::Pron: return "Pron";
    case Category::Cond: return "Cond";
    case Category::Seq: return "Seq";
    case Category::Rel: return "Rel";
  }
  return "?";
}

const std::vector<LexEntry>& lexicon() {
  static const std::vector<LexEntry> lex = make_lexicon();
  return lex;
}

const LexEntry& entry(std::string_view word) {
  const std::string key = lowercase(word);
  for (const auto& e : lexicon()) {
    if (e.surface == key) return e;
  }
  throw UnknownWord(std::string(word));
}

std::pair<Term, Term> abstract_presuppositions(const Term& meaning, const Term& type) {
  if (meaning.is(Kind::Lam)) {
    if (!type.is(Kind::Pi)) throw std::invalid_argument("lambda meaning needs a Pi type");
    Term codomain = substitute(type.codomain(), type.binder(), make_var(meaning.binder()));
    auto [body, body_type] = abstract_presuppositions(meaning.body(), codomain);
    return {make_lam(meaning.binder(), body), make_pi(meaning.binder(), type.domain(), body_type)};
  }
  if (meaning.is(Kind::Require)) {
    auto [body, body_type] = abstract_presuppositions(meaning.body(), type);
    return {make_lam(meaning.binder(), body), make_pi(meaning.binder(), meaning.goal(), body_type)};
  }
  return {meaning, type};
}

Term the_sketch() { return parse_term("\\P x q. x"); }

} // namespace presup
