#include "doctest.h"
#include "presup/error.hpp"
#include "presup/syntax.hpp"
#include "support/generators.hpp"
#include "support/terms.hpp"

using namespace presup;
using fixture::t;

TEST_CASE("parsing builds the expected trees") {
  CHECK(alpha_eq(t("require x : E in x"), make_require("x", make_const("E"), make_var("x"))));
  CHECK(alpha_eq(t("Set"), make_universe(0)));
  CHECK(alpha_eq(t("Set12"), make_universe(12)));
  CHECK(alpha_eq(t("f a b"), make_app(make_app(make_var("f"), make_var("a")), make_var("b"))));
  CHECK(alpha_eq(t("A -> B -> C"), make_arrow(make_var("A"), make_arrow(make_var("B"), make_var("C")))));
  CHECK(alpha_eq(t("A * B * C"), make_product(make_var("A"), make_product(make_var("B"), make_var("C")))));
  CHECK(alpha_eq(t("A * B -> C"), make_arrow(make_product(make_var("A"), make_var("B")), make_var("C"))));
  CHECK(alpha_eq(t("\\x y. x"), make_lam("x", make_lam("y", make_var("x")))));
  CHECK(alpha_eq(t("fst p q"), make_app(make_fst(make_var("p")), make_var("q"))));
  CHECK(alpha_eq(t("<a, b>"), make_pair(make_var("a"), make_var("b"))));
  CHECK(alpha_eq(t("let x : A = a in x"), make_let("x", make_var("A"), make_var("a"), make_var("x"))));
}

TEST_CASE("binders extend as far right as possible") {
  Term s = t("(p : (x : E) * Man x * WalkedIn x) * SatDown (fst p)");
  REQUIRE(s.is(Kind::Sigma));
  CHECK(s.codomain().is(Kind::App));
  REQUIRE(s.domain().is(Kind::Sigma));
  CHECK(s.domain().codomain().is(Kind::Sigma));
  Term lam = t("\\x. x -> x");
  REQUIRE(lam.is(Kind::Lam));
  CHECK(lam.body().is(Kind::Pi));
}

TEST_CASE("constants and variables") {
  CHECK(t("E").is(Kind::Const));
  CHECK(t("e").is(Kind::Var));
  Term shadow = t("\\E. E");
  CHECK(shadow.body().is(Kind::Var));
  Signature sig;
  sig.push_back({"K", make_universe(0)});
  CHECK(parse_term("K", sig).is(Kind::Const));
  CHECK(parse_term("E", sig).is(Kind::Var));
  CHECK(t("x'").is(Kind::Var));
}

TEST_CASE("syntax errors carry a position") {
  for (const char* bad : {"fst snd", "", "(x : E", "\\. x", "<a b>", "require x E in x", "a $ b", "let x = a in x",
                          "(x : E) x", "fst"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(t(bad), SyntaxError);
  }
  try {
    t("Man )");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("printing") {
  CHECK(format_term(make_require("x", make_const("E"), make_var("x"))) == "require x : E in x");
  CHECK(format_term(nested_proj(make_var("p"), 3)) == "fst (snd (snd p))");
  CHECK(format_term(t("(p : (x : E) * Man x * WalkedIn x) * SatDown (fst p)")) ==
        "(p : (x : E) * (Man x * WalkedIn x)) * SatDown (fst p)");
  CHECK(format_term(t("(A -> B) -> C")) == "(A -> B) -> C");
  CHECK(format_term(t("(A * B) * C")) == "(A * B) * C");
  CHECK(format_term(t("f (g x) y")) == "f (g x) y");
  CHECK(format_term(t("(\\x. x) y")) == "(\\x. x) y");
  CHECK(format_term(t("(x : E) -> Man x")) == "(x : E) -> Man x");
  CHECK(format_term(t("(x : E) -> Man y")) == "E -> Man y");
  CHECK(format_term(t("Set")) == "Set0");
  CHECK(format_term(t("<fst p, \\x. x>")) == "<fst p, \\x. x>");
}

TEST_CASE("printing renames binders that would capture a constant") {
  Term tricky = make_lam("Man", make_app(make_const("Man"), make_var("Man")));
  std::string text = format_term(tricky);
  CAPTURE(text);
  CHECK(alpha_eq(t(text), tricky));
}

TEST_CASE("round trip over generated terms") {
  gen::Generator g(7);
  for (int i = 0; i < 300; ++i) {
    gen::Sample s = gen::sample(g, 4);
    for (const Term& x : {s.term, s.type}) {
      std::string text = format_term(x);
      CAPTURE(text);
      CHECK(alpha_eq(t(text), x));
      CHECK(format_term(t(text)) == text);
    }
  }
}
