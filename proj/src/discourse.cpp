#include "presup/discourse.hpp"

#include <cctype>
#include <set>

#include "presup/error.hpp"
#include "presup/evaluator.hpp"
#include "presup/lexicon.hpp"

namespace presup {

namespace {

struct Word {
  std::string text;
  std::size_t pos;
};

const std::set<std::string>& vocabulary() {
  static const std::set<std::string> words = [] {
    std::set<std::string> out;
    for (const auto& e : lexicon()) {
      std::size_t start = 0;
      while (start < e.surface.size()) {
        std::size_t end = e.surface.find(' ', start);
        if (end == std::string::npos) end = e.surface.size();
        out.insert(e.surface.substr(start, end - start));
        start = end + 1;
      }
    }
    return out;
  }();
  return words;
}

std::string lower(std::string_view s) {
  std::string out;
  for (unsigned char c : s) out += static_cast<char>(std::tolower(c));
  return out;
}

std::vector<Word> tokenize(std::string_view text) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = text[i];
    if (std::isspace(c)) {
      ++i;
    } else if (c == '.' || c == ',') {
      out.push_back({std::string(1, static_cast<char>(c)), i});
      ++i;
    } else if (c == '(') {
      if (lower(text.substr(i, 6)) != "(then)") throw SyntaxError(i, "a word");
      i += 6;
    } else if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
      std::string word = lower(text.substr(i, j - i));
      if (!vocabulary().count(word)) throw UnknownWord(std::string(text.substr(i, j - i)));
      out.push_back({word, i});
      i = j;
    } else {
      throw SyntaxError(i, "a word");
    }
  }
  out.push_back({"", text.size()});
  return out;
}

class DiscourseParser {
public:
  explicit DiscourseParser(std::vector<Word> words) : words_(std::move(words)) {}

  DiscourseTree parse() {
    DiscourseTree tree;
    tree.sentences.push_back(sentence());
    while (at(".")) {
      ++pos_;
      if (at_end()) break;
      tree.sentences.push_back(sentence());
    }
    if (!at_end()) throw SyntaxError(peek().pos, "'.' or end of input");
    return tree;
  }

private:
  const Word& peek(std::size_t ahead = 0) const { return words_[std::min(pos_ + ahead, words_.size() - 1)]; }
  bool at(std::string_view w, std::size_t ahead = 0) const { return peek(ahead).text == w; }
  bool at_end() const { return pos_ + 1 >= words_.size(); }

  std::optional<Category> category() const {
    for (const auto& e : lexicon()) {
      if (e.surface == peek().text) return e.category;
    }
    return std::nullopt;
  }

  Sentence sentence() {
    Sentence s;
    if (at("if")) {
      ++pos_;
      s.form = Sentence::Form::Conditional;
      s.antecedent = std::make_shared<const Sentence>(sentence());
      if (!at(",")) throw SyntaxError(peek().pos, "','");
      ++pos_;
      s.consequent = std::make_shared<const Sentence>(sentence());
      return s;
    }
    s.form = Sentence::Form::Simple;
    s.subject = std::make_shared<const NounPhrase>(noun_phrase());
    s.predicate = verb_phrase();
    return s;
  }

  NounPhrase noun_phrase() {
    auto cat = category();
    NounPhrase np;
    if (cat == Category::Pron) {
      np.form = NounPhrase::Form::Pron;
      np.word = words_[pos_++].text;
      return np;
    }
    if (cat != Category::Det) throw SyntaxError(peek().pos, "a determiner or pronoun");
    np.form = NounPhrase::Form::Det;
    np.word = words_[pos_++].text;
    if (category() != Category::N) throw SyntaxError(peek().pos, "a noun");
    np.noun = words_[pos_++].text;
    if (at("who")) {
      ++pos_;
      np.relative = verb_phrase();
    }
    return np;
  }

  VerbPhrase verb_phrase() {
    if ((at("walked") && at("in", 1)) || (at("sat") && at("down", 1))) {
      VerbPhrase vp{peek().text + " " + peek(1).text, nullptr};
      pos_ += 2;
      return vp;
    }
    if (category() != Category::TV) throw SyntaxError(peek().pos, "a verb");
    VerbPhrase vp{words_[pos_++].text, nullptr};
    vp.object = std::make_shared<const NounPhrase>(noun_phrase());
    return vp;
  }

  std::vector<Word> words_;
  std::size_t pos_ = 0;
};

const Term& meaning(const std::string& word) { return entry(word).meaning; }

bool quantified(const NounPhrase& np) {
  return np.form == NounPhrase::Form::Det && np.word != "the";
}

Term verb_meaning(const VerbPhrase& vp);

// The noun, intersected with its relative clause if there is one.
Term restrictor(const NounPhrase& np) {
  if (!np.relative) return meaning(np.noun);
  return make_apps(meaning("who"), {meaning(np.noun), verb_meaning(*np.relative)});
}

// For a/every: a quantifier over predicates. Otherwise: an entity.
Term np_meaning(const NounPhrase& np) {
  if (np.form == NounPhrase::Form::Pron) return meaning(np.word);
  return make_app(meaning(np.word), restrictor(np));
}

Term verb_meaning(const VerbPhrase& vp) {
  const Term& verb = meaning(vp.verb);
  if (!vp.object) return verb;
  const Term object = np_meaning(*vp.object);
  if (quantified(*vp.object)) {
    return make_lam("x", make_app(object, make_lam("y", make_apps(verb, {make_var("x"), make_var("y")}))));
  }
  return make_lam("z", make_apps(verb, {make_var("z"), object}));
}

Term sentence_meaning(const Sentence& s) {
  if (s.form == Sentence::Form::Conditional) {
    return make_apps(meaning("if"), {sentence_meaning(*s.antecedent), sentence_meaning(*s.consequent)});
  }
  const Term subject = np_meaning(*s.subject);
  const Term predicate = verb_meaning(*s.predicate);
  return quantified(*s.subject) ? make_app(subject, predicate) : make_app(predicate, subject);
}

std::string np_text(const NounPhrase& np);

std::string vp_text(const VerbPhrase& vp) {
  return vp.object ? vp.verb + " " + np_text(*vp.object) : vp.verb;
}

std::string np_text(const NounPhrase& np) {
  if (np.form == NounPhrase::Form::Pron) return np.word;
  std::string out = np.word + " " + np.noun;
  if (np.relative) out += " who " + vp_text(*np.relative);
  return out;
}

std::string sentence_text(const Sentence& s) {
  if (s.form == Sentence::Form::Conditional) {
    return "if " + sentence_text(*s.antecedent) + ", " + sentence_text(*s.consequent);
  }
  return np_text(*s.subject) + " " + vp_text(*s.predicate);
}

template <class T>
bool same_ptr(const std::shared_ptr<const T>& a, const std::shared_ptr<const T>& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

} // namespace

bool operator==(const VerbPhrase& a, const VerbPhrase& b) {
  return a.verb == b.verb && same_ptr(a.object, b.object);
}

bool operator==(const NounPhrase& a, const NounPhrase& b) {
  return a.form == b.form && a.word == b.word && a.noun == b.noun && a.relative == b.relative;
}

bool operator==(const Sentence& a, const Sentence& b) {
  return a.form == b.form && same_ptr(a.subject, b.subject) && a.predicate == b.predicate &&
         same_ptr(a.antecedent, b.antecedent) && same_ptr(a.consequent, b.consequent);
}

bool operator==(const DiscourseTree& a, const DiscourseTree& b) { return a.sentences == b.sentences; }

DiscourseTree parse_discourse(std::string_view text) { return DiscourseParser(tokenize(text)).parse(); }

Term interpret(const DiscourseTree& tree) {
  // (p : S1) * ((p' : S2) * S3)
  Term out = sentence_meaning(tree.sentences.back());
  for (std::size_t i = tree.sentences.size() - 1; i-- > 0;) {
    out = make_sigma("p" + std::string(i, '\''), sentence_meaning(tree.sentences[i]), out);
  }
  return normalize(out);
}

std::string format_discourse(const DiscourseTree& tree) {
  std::string out;
  for (const auto& s : tree.sentences) {
    std::string text = sentence_text(s);
    text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (!out.empty()) out += ' ';
    out += text + ".";
  }
  return out;
}

} // namespace presup
