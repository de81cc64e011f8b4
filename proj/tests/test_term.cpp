#include "doctest.h"
#include "presup/term.hpp"
#include "support/terms.hpp"

using namespace presup;
using fixture::t;

TEST_CASE("substitution replaces free occurrences only") {
  Term body = make_app(make_var("x"), make_lam("x", make_var("x")));
  Term out = substitute(body, "x", make_const("E"));
  CHECK(alpha_eq(out, make_app(make_const("E"), make_lam("x", make_var("x")))));
}

TEST_CASE("substitution avoids capture by renaming the binder") {
  // [y/x] \y. x y  =  \y'. y y'
  Term body = make_lam("y", make_app(make_var("x"), make_var("y")));
  Term out = substitute(body, "x", make_var("y"));
  REQUIRE(out.is(Kind::Lam));
  CHECK(out.binder() != "y");
  CHECK(alpha_eq(out, make_lam("z", make_app(make_var("y"), make_var("z")))));
  CHECK(free_vars(out) == std::set<std::string>{"y"});
}

TEST_CASE("substitution under every binding form") {
  Term value = make_var("y");
  for (const char* text : {"(y : E) -> Man x", "(y : E) * Man x", "require y : Man x in x",
                           "let y : E = x in x"}) {
    CAPTURE(text);
    Term out = substitute(t(text), "x", value);
    CHECK(occurs_free("y", out));
    CHECK_FALSE(occurs_free("x", out));
  }
}

TEST_CASE("let binds in its body but not in its annotation or definition") {
  Term let = make_let("x", make_var("x"), make_var("x"), make_var("x"));
  CHECK(free_vars(let) == std::set<std::string>{"x"});
  Term out = substitute(let, "x", make_const("E"));
  CHECK(alpha_eq(out, make_let("x", make_const("E"), make_const("E"), make_var("x"))));
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(t("\\x. x"), t("\\y. y")));
  CHECK_FALSE(alpha_eq(t("\\x y. x"), t("\\x y. y")));
  CHECK(alpha_eq(t("(x : E) * Man x"), t("(z : E) * Man z")));
  CHECK_FALSE(alpha_eq(t("(x : E) * Man x"), t("(x : E) -> Man x")));
  CHECK(alpha_eq(t("require x : E in x"), t("require y : E in y")));
  CHECK_FALSE(alpha_eq(make_var("E"), make_const("E")));
  CHECK_FALSE(alpha_eq(t("Set0"), t("Set1")));
  CHECK_FALSE(alpha_eq(t("\\x. y"), t("\\y. y")));
}

TEST_CASE("free variables") {
  CHECK(free_vars(t("\\x. x y")) == std::set<std::string>{"y"});
  CHECK(free_vars(t("Man E")).empty());
  CHECK(free_vars(t("require x : P in f x")) == std::set<std::string>{"P", "f"});
}

TEST_CASE("nested projections") {
  Term p = make_var("p");
  CHECK(alpha_eq(nested_proj(p, 1), t("fst p")));
  CHECK(alpha_eq(nested_proj(p, 3), t("fst (snd (snd p))")));
  CHECK_THROWS_AS(nested_proj(p, 0), std::invalid_argument);
}

TEST_CASE("non-dependent constructors pick a binder outside the body") {
  Term arrow = make_arrow(make_const("E"), make_var("_"));
  REQUIRE(arrow.is(Kind::Pi));
  CHECK_FALSE(occurs_free(arrow.binder(), arrow.codomain()));
  CHECK(occurs_free("_", arrow));
}

TEST_CASE("telescope lookup sees the newest entry") {
  Context c = fixture::ctx({{"x", "E"}, {"x", "Set0"}});
  REQUIRE(c.lookup("x"));
  CHECK(alpha_eq(*c.lookup("x"), t("Set0")));
  CHECK(c.lookup("y") == nullptr);
  CHECK(same_telescope(c, c));
  CHECK_FALSE(same_telescope(c, fixture::ctx({{"x", "E"}})));
}

TEST_CASE("contains_require") {
  CHECK(contains_require(t("SatDown (require x : E in x)")));
  CHECK_FALSE(contains_require(t("SatDown (fst p)")));
}
