#include "presup/syntax.hpp"

#include <cctype>
#include <vector>

#include "presup/error.hpp"
#include "presup/lexicon.hpp"

namespace presup {

namespace {

enum class Tok { Ident, Universe, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
  std::uint32_t level = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

bool is_keyword(const std::string& s) {
  return s == "fst" || s == "snd" || s == "require" || s == "in" || s == "let";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      if (word.rfind("Set", 0) == 0 &&
          word.find_first_not_of("0123456789", 3) == std::string::npos) {
        std::uint32_t level = word.size() == 3 ? 0 : static_cast<std::uint32_t>(std::stoul(word.substr(3)));
        out.push_back({Tok::Universe, word, i, level});
      } else {
        out.push_back({Tok::Ident, word, i});
      }
      i = j;
      continue;
    }
    if (src.substr(i, 2) == "->") {
      out.push_back({Tok::Sym, "->", i});
      i += 2;
      continue;
    }
    static constexpr std::string_view symbols = "()<>,:=.\\*";
    if (symbols.find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, c), i});
      ++i;
      continue;
    }
    throw SyntaxError(i, "a term (unexpected character '" + std::string(1, c) + "')");
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> toks, const Signature& sig) : toks_(std::move(toks)), sig_(sig) {}

  Term parse() {
    Term t = expr();
    if (peek().kind != Tok::End) throw SyntaxError(peek().pos, "end of input");
    return t;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }

  bool at_sym(std::string_view s, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Sym && t.text == s;
  }

  bool at_keyword(std::string_view s) const {
    const Token& t = peek();
    return t.kind == Tok::Ident && t.text == s;
  }

  bool at_name(std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Ident && !is_keyword(t.text);
  }

  void expect_sym(std::string_view s) {
    if (!at_sym(s)) throw SyntaxError(peek().pos, "'" + std::string(s) + "'");
    ++pos_;
  }

  void expect_keyword(std::string_view s) {
    if (!at_keyword(s)) throw SyntaxError(peek().pos, "'" + std::string(s) + "'");
    ++pos_;
  }

  std::string name() {
    if (!at_name()) throw SyntaxError(peek().pos, "an identifier");
    return toks_[pos_++].text;
  }

  template <class F>
  Term scoped(const std::string& binder, F f) {
    bound_.push_back(binder);
    Term t = f();
    bound_.pop_back();
    return t;
  }

  Term expr() {
    if (at_sym("\\")) {
      ++pos_;
      std::vector<std::string> binders{name()};
      while (at_name()) binders.push_back(name());
      expect_sym(".");
      return lambdas(binders, 0);
    }
    if (at_keyword("require")) {
      ++pos_;
      std::string x = name();
      expect_sym(":");
      Term goal = expr();
      expect_keyword("in");
      Term body = scoped(x, [&] { return expr(); });
      return make_require(x, goal, body);
    }
    if (at_keyword("let")) {
      ++pos_;
      std::string x = name();
      expect_sym(":");
      Term annot = expr();
      expect_sym("=");
      Term def = expr();
      expect_keyword("in");
      Term body = scoped(x, [&] { return expr(); });
      return make_let(x, annot, def, body);
    }
    Term lhs = prod();
    if (at_sym("->")) {
      ++pos_;
      return make_arrow(lhs, expr());
    }
    return lhs;
  }

  Term lambdas(const std::vector<std::string>& binders, std::size_t i) {
    if (i == binders.size()) return expr();
    return make_lam(binders[i], scoped(binders[i], [&] { return lambdas(binders, i + 1); }));
  }

  // (x : A) -> B  or  (x : A) * B, with the body extending right.
  Term binder_form() {
    expect_sym("(");
    std::string x = name();
    expect_sym(":");
    Term domain = expr();
    expect_sym(")");
    bool is_pi;
    if (at_sym("->")) {
      is_pi = true;
    } else if (at_sym("*")) {
      is_pi = false;
    } else {
      throw SyntaxError(peek().pos, "'->' or '*' after a binder");
    }
    ++pos_;
    Term body = scoped(x, [&] { return expr(); });
    return is_pi ? make_pi(x, domain, body) : make_sigma(x, domain, body);
  }

  Term prod() {
    if (at_sym("(") && at_name(1) && at_sym(":", 2)) return binder_form();
    Term lhs = app();
    if (at_sym("*")) {
      ++pos_;
      return make_product(lhs, prod());
    }
    return lhs;
  }

  bool at_atom() const {
    const Token& t = peek();
    return at_name() || t.kind == Tok::Universe || at_sym("(") || at_sym("<");
  }

  Term app() {
    Term head;
    if (at_keyword("fst")) {
      ++pos_;
      head = make_fst(atom());
    } else if (at_keyword("snd")) {
      ++pos_;
      head = make_snd(atom());
    } else {
      head = atom();
    }
    while (at_atom()) head = make_app(head, atom());
    return head;
  }

  Term atom() {
    const Token& t = peek();
    if (t.kind == Tok::Universe) {
      ++pos_;
      return make_universe(t.level);
    }
    if (at_name()) {
      ++pos_;
      return resolve(t.text);
    }
    if (at_sym("(")) {
      ++pos_;
      Term inner = expr();
      expect_sym(")");
      return inner;
    }
    if (at_sym("<")) {
      ++pos_;
      Term a = expr();
      expect_sym(",");
      Term b = expr();
      expect_sym(">");
      return make_pair(a, b);
    }
    throw SyntaxError(t.pos, "a term");
  }

  Term resolve(const std::string& id) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (*it == id) return make_var(id);
    }
    return sig_.contains(id) ? make_const(id) : make_var(id);
  }

  std::vector<Token> toks_;
  const Signature& sig_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
};

// Precedence of the context a subterm is printed in.
enum Prec { Top = 0, ProdRight = 1, AppHead = 2, Arg = 3 };

bool mentions_const(const Term& t, const std::string& name) {
  if (t.is(Kind::Const)) return t.name() == name;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (mentions_const(t.child(i), name)) return true;
  }
  return false;
}

bool dependent(const Term& t) { return occurs_free(t.binder(), t.codomain()); }

int level_of(const Term& t) {
  switch (t.kind()) {
    case Kind::Lam:
    case Kind::Require:
    case Kind::Let:
    case Kind::Pi:
      return Top;
    case Kind::Sigma:
      return dependent(t) ? Top : ProdRight;
    case Kind::App:
    case Kind::Fst:
    case Kind::Snd:
      return AppHead;
    default:
      return Arg;
  }
}

void print(const Term& t, int prec, std::string& out);

// A binder that shares its name with a constant used in its scope would
// capture that constant when read back.
Term printable_binder(const Term& t) {
  if (!mentions_const(t.body(), t.binder())) return t;
  const Term& scoped = t.body();
  auto name = fresh_name(t.binder(), [&](const std::string& n) {
    return mentions_const(scoped, n) || occurs_free(n, scoped);
  });
  std::array<Term, 3> kids{};
  for (std::size_t i = 0; i < t.arity(); ++i) {
    kids[i] = &t.child(i) == &scoped ? substitute(scoped, t.binder(), make_var(name)) : t.child(i);
  }
  return t.with_binder(name, kids);
}

void print_form(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Const:
      out += t.name();
      return;
    case Kind::Universe:
      out += "Set" + std::to_string(t.level());
      return;
    case Kind::Lam:
      out += "\\" + t.binder() + ". ";
      print(t.body(), Top, out);
      return;
    case Kind::Require:
      out += "require " + t.binder() + " : ";
      print(t.goal(), Top, out);
      out += " in ";
      print(t.body(), Top, out);
      return;
    case Kind::Let:
      out += "let " + t.binder() + " : ";
      print(t.annot(), Top, out);
      out += " = ";
      print(t.def(), Top, out);
      out += " in ";
      print(t.body(), Top, out);
      return;
    case Kind::Pi:
    case Kind::Sigma: {
      const char* op = t.is(Kind::Pi) ? " -> " : " * ";
      if (!dependent(t)) {
        print(t.domain(), t.is(Kind::Pi) ? ProdRight : AppHead, out);
        out += op;
        print(t.codomain(), t.is(Kind::Pi) ? Top : ProdRight, out);
        return;
      }
      out += "(" + t.binder() + " : ";
      print(t.domain(), Top, out);
      out += ")";
      out += op;
      const Term& body = t.codomain();
      const bool tuple = t.is(Kind::Sigma) && body.is(Kind::Sigma) && !dependent(body);
      print(body, tuple ? Arg : Top, out);
      return;
    }
    case Kind::App:
      print(t.fun(), AppHead, out);
      out += " ";
      print(t.arg(), Arg, out);
      return;
    case Kind::Fst:
    case Kind::Snd:
      out += t.is(Kind::Fst) ? "fst " : "snd ";
      print(t.pair(), Arg, out);
      return;
    case Kind::Pair:
      out += "<";
      print(t.first(), Top, out);
      out += ", ";
      print(t.second(), Top, out);
      out += ">";
      return;
  }
}

void print(const Term& t, int prec, std::string& out) {
  const Term shown = t.binds() ? printable_binder(t) : t;
  const bool parens = level_of(shown) < prec;
  if (parens) out += "(";
  print_form(shown, out);
  if (parens) out += ")";
}

} // namespace

Term parse_term(std::string_view text, const Signature& sig) { return Parser(lex(text), sig).parse(); }

Term parse_term(std::string_view text) { return parse_term(text, base_signature()); }

std::string format_term(const Term& t) {
  std::string out;
  print(t, Top, out);
  return out;
}

} // namespace presup
