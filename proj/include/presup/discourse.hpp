#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "presup/term.hpp"

namespace presup {

struct NounPhrase;

// An intransitive verb, or a transitive verb with its object.
struct VerbPhrase {
  std::string verb;
  std::shared_ptr<const NounPhrase> object;
};

// "a man", "every farmer who owns a donkey", "he".
struct NounPhrase {
  enum class Form { Det, Pron };
  Form form;
  std::string word;  // determiner or pronoun
  std::string noun;  // empty for pronouns
  std::optional<VerbPhrase> relative;
};

struct Sentence {
  enum class Form { Simple, Conditional };
  Form form;
  // Simple
  std::shared_ptr<const NounPhrase> subject;
  std::optional<VerbPhrase> predicate;
  // Conditional
  std::shared_ptr<const Sentence> antecedent;
  std::shared_ptr<const Sentence> consequent;
};

struct DiscourseTree {
  std::vector<Sentence> sentences;
};

bool operator==(const NounPhrase& a, const NounPhrase& b);
bool operator==(const VerbPhrase& a, const VerbPhrase& b);
bool operator==(const Sentence& a, const Sentence& b);
bool operator==(const DiscourseTree& a, const DiscourseTree& b);

// discourse := sentence ('.' sentence)* '.'?
// sentence  := 'if' sentence ',' sentence | np vp
// np        := ('a' | 'the' | 'every') noun ('who' vp)? | 'he' | 'it'
// vp        := 'walked in' | 'sat down' | ('owns' | 'beats') np
//
// Case-insensitive; "(then)" is skipped. Throws UnknownWord for a word
// outside the lexicon and SyntaxError otherwise.
DiscourseTree parse_discourse(std::string_view text);

// The composed meaning, beta-normalized. Requires from definite
// descriptions and pronouns are left in place.
Term interpret(const DiscourseTree& tree);

// Back to English, one period-terminated sentence after another.
std::string format_discourse(const DiscourseTree& tree);

} // namespace presup
