#include "doctest.h"
#include "presup/elaborator.hpp"
#include "presup/evaluator.hpp"
#include "presup/typechecker.hpp"
#include "support/terms.hpp"

using namespace presup;
using fixture::t;

namespace {

const Signature& sig() { return base_signature(); }

TypeErrorKind infer_error(const Context& ctx, const char* text) {
  try {
    infer_all(sig(), ctx, t(text));
  } catch (const TypeError& e) {
    return e.kind();
  }
  FAIL("no type error for " << text);
  return TypeErrorKind::InvalidDerivation;
}

TypeErrorKind check_error(const Context& ctx, const char* text, const char* type) {
  try {
    check_all(sig(), ctx, t(text), t(type));
  } catch (const TypeError& e) {
    return e.kind();
  }
  FAIL("no type error for " << text << " : " << type);
  return TypeErrorKind::InvalidDerivation;
}

Term only_type(const Context& ctx, const char* text) {
  auto ds = infer_all(sig(), ctx, t(text));
  REQUIRE(ds.size() == 1);
  return ds.front()->type();
}

} // namespace

TEST_CASE("base signature and discourse contexts are valid") {
  CHECK_NOTHROW(check_signature(sig()));
  CHECK_NOTHROW(check_context(sig(), fixture::man_walked_in()));
  CHECK_NOTHROW(check_context(sig(), fixture::farmer_owns_donkey()));
}

TEST_CASE("signature and context validity errors") {
  Signature dup = sig();
  dup.push_back({"E", t("Set0")});
  CHECK_THROWS_WITH_AS(check_signature(dup), doctest::Contains("duplicate"), TypeError);

  Signature bad = sig();
  bad.push_back({"Bad", t("Man")});
  try {
    check_signature(bad);
    FAIL("accepted an entry whose type is not a type");
  } catch (const TypeError& e) {
    CHECK(e.kind() == TypeErrorKind::IllTypedEntry);
  }

  try {
    check_context(sig(), fixture::ctx({{"q", "SatDown (require x : E in x)"}}));
    FAIL("accepted a require in a hypothesis type");
  } catch (const TypeError& e) {
    CHECK(e.kind() == TypeErrorKind::IllTypedEntry);
  }

  try {
    check_context(sig(), fixture::ctx({{"E", "Set0"}}));
    FAIL("accepted a hypothesis named like a constant");
  } catch (const TypeError& e) {
    CHECK(e.kind() == TypeErrorKind::DuplicateName);
  }
}

TEST_CASE("inference of the basic forms") {
  Context p = fixture::man_walked_in();
  CHECK(alpha_eq(only_type({}, "E"), t("Set0")));
  CHECK(alpha_eq(only_type({}, "Set0"), t("Set1")));
  CHECK(alpha_eq(only_type({}, "Set3"), t("Set4")));
  CHECK(alpha_eq(only_type({}, "Man"), t("E -> Set0")));
  CHECK(alpha_eq(only_type(p, "p"), t("(x : E) * Man x * WalkedIn x")));
  CHECK(alpha_eq(only_type(p, "fst p"), t("E")));
  CHECK(alpha_eq(only_type(p, "snd p"), t("Man (fst p) * WalkedIn (fst p)")));
  CHECK(alpha_eq(only_type(p, "SatDown (fst p)"), t("Set0")));
  CHECK(alpha_eq(only_type({}, "(x : E) -> Man x"), t("Set0")));
  CHECK(alpha_eq(only_type({}, "(x : Set0) * x"), t("Set1")));
  CHECK(alpha_eq(only_type({}, "Set0 -> Set2"), t("Set3")));
  CHECK(alpha_eq(only_type({}, "let A : Set1 = Set0 in A"), t("Set1")));
}

TEST_CASE("checking lambdas, pairs and cumulativity") {
  Context p = fixture::man_walked_in();
  CHECK(check_all(sig(), {}, t("\\x. x"), t("E -> E")).size() == 1);
  CHECK(check_all(sig(), p, t("<fst p, fst (snd p)>"), t("(y : E) * Man y")).size() == 1);
  CHECK(check_all(sig(), {}, t("Set0"), t("Set5")).size() == 1);
  CHECK(check_all(sig(), {}, t("\\P Q. (x : E) * P x * Q x"), t("(E -> Set0) -> (E -> Set0) -> Set0")).size() == 1);
}

TEST_CASE("conversion is used when types agree only up to computation") {
  Context q = fixture::ctx({{"h", "E"}, {"m", "Man h"}});
  auto ds = check_all(sig(), q, t("m"), t("let P : E -> Set0 = Man in P h"));
  REQUIRE(ds.size() == 1);
  CHECK(ds.front()->rule == Rule::Conv);
  CHECK_FALSE(find_invalid(sig(), *ds.front()));
}

TEST_CASE("type errors") {
  Context p = fixture::man_walked_in();
  CHECK(infer_error({}, "fst Set0") == TypeErrorKind::NotAPair);
  CHECK(infer_error({}, "Set0 Set0") == TypeErrorKind::NotAFunction);
  CHECK(infer_error({}, "\\x. x") == TypeErrorKind::CannotInfer);
  CHECK(infer_error({}, "<E, E>") == TypeErrorKind::CannotInfer);
  CHECK(infer_error({}, "y") == TypeErrorKind::UnboundName);
  CHECK(infer_error({}, "Man Set0") == TypeErrorKind::TypeMismatch);
  CHECK(infer_error({}, "(x : Man) -> E") == TypeErrorKind::NotAType);
  CHECK(infer_error({}, "require x : E in x") == TypeErrorKind::UnresolvedPresupposition);
  CHECK(infer_error(p, "require x : SatDown (require y : E in y) in x") == TypeErrorKind::PresuppositionInType);
  CHECK(infer_error(p, "let q : E = Set0 in q") == TypeErrorKind::TypeMismatch);
  CHECK(infer_error(p, "let q : E = fst p in (\\z. z) q") == TypeErrorKind::CannotInfer);
  CHECK(check_error({}, "Set1", "Set1") == TypeErrorKind::TypeMismatch);
  CHECK(check_error(p, "fst p", "Man (fst p)") == TypeErrorKind::TypeMismatch);
  CHECK(check_error(p, "\\x. x", "E") == TypeErrorKind::TypeMismatch);
}

TEST_CASE("let may not leak its binder into the type") {
  Context c = fixture::ctx({{"h", "E"}, {"m", "Man h"}});
  CHECK(infer_all(sig(), c, t("let y : E = h in m")).size() == 1);
  CHECK(infer_error(fixture::ctx({{"h", "E"}, {"m", "(y : E) -> Man y"}}), "let y : E = h in m y") ==
        TypeErrorKind::ScopeEscape);
}

TEST_CASE("unresolved presupposition names the goal and the context") {
  try {
    infer_all(sig(), {}, t("require x : E in x"));
    FAIL("resolved with nothing to resolve against");
  } catch (const TypeError& e) {
    REQUIRE(e.kind() == TypeErrorKind::UnresolvedPresupposition);
    CHECK(alpha_eq(e.goal(), t("E")));
    CHECK(e.ctx().empty());
  }
}

TEST_CASE("require yields one derivation per witness") {
  Context d = fixture::farmer_owns_donkey();
  auto ds = infer_all(sig(), d, t("require x : E in x"));
  REQUIRE(ds.size() == 2);
  CHECK(alpha_eq(ds[0]->witness, t("fst p")));
  CHECK(alpha_eq(ds[1]->witness, t("fst (snd (snd p))")));
  for (const auto& x : ds) CHECK(alpha_eq(x->type(), t("E")));

  auto two = infer_all(sig(), d, t("Beats (require x : E in x) (require y : E in y)"));
  CHECK(two.size() == 4);
}

TEST_CASE("derivation for he sat down") {
  auto ds = infer_all(sig(), fixture::man_walked_in(), t("SatDown (require x : E in x)"));
  REQUIRE(ds.size() == 1);
  const Derivation& d = *ds.front();
  CHECK(d.rule == Rule::PiE);
  CHECK(alpha_eq(d.type(), t("Set0")));
  REQUIRE(d.premises.size() == 2);
  const Derivation& req = *d.premises[1];
  CHECK(req.rule == Rule::Require);
  CHECK(alpha_eq(req.witness, t("fst p")));
  CHECK(req.premises[0]->rule == Rule::SigE1);
  CHECK_FALSE(find_invalid(sig(), d));
}

TEST_CASE("derivation limits") {
  Context d = fixture::farmer_owns_donkey();
  CheckConfig cfg;
  cfg.max_solutions_per_require = 1;
  CHECK(infer_all(sig(), d, t("Beats (require x : E in x) (require y : E in y)"), cfg).size() == 1);
  cfg = {};
  cfg.max_total_derivations = 3;
  CHECK(infer_all(sig(), d, t("Beats (require x : E in x) (require y : E in y)"), cfg).size() == 3);
  cfg = {};
  cfg.solver_depth = 2;
  CHECK(infer_all(sig(), d, t("require x : E in x"), cfg).size() == 1);
  cfg = {};
  cfg.step_budget = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("budget exhaustion is reported as such") {
  CheckConfig cfg;
  cfg.step_budget = 3;
  try {
    check_all(sig(), {}, t("E"), t("let f : Set1 -> Set1 = \\y. y in f (f (f (f Set0)))"), cfg);
    FAIL("no error");
  } catch (const TypeError& e) {
    CHECK(e.kind() == TypeErrorKind::BudgetExceeded);
  }
}

TEST_CASE("binders that clash with the context are renamed") {
  Context c = fixture::ctx({{"x", "E"}});
  auto ds = check_all(sig(), c, t("\\x. x"), t("E -> E"));
  REQUIRE(ds.size() == 1);
  const Derivation& body = *ds.front()->premises[0];
  CHECK(body.ctx().size() == 2);
  CHECK(body.ctx()[1].name != "x");
  CHECK_FALSE(find_invalid(sig(), *ds.front()));
}

TEST_CASE("convertible") {
  CHECK(convertible(t("(\\y. Man y) h"), t("Man h")));
  CHECK_FALSE(convertible(t("Man h"), t("WalkedIn h")));
}

TEST_CASE("universe levels of types") {
  CHECK(type_level(sig(), {}, t("E")) == 0);
  CHECK(type_level(sig(), {}, t("Set0")) == 1);
  CHECK(type_level(sig(), {}, t("(A : Set1) -> A")) == 2);
  CHECK_THROWS_AS(type_level(sig(), {}, t("Man")), TypeError);
}

TEST_CASE("reduction preserves types of elaborated terms, not of requires") {
  // The only witness for E * E is the let-bound l, which reduction inlines.
  Context c = fixture::ctx({{"h", "E"}});
  Term t0 = t("let l : E * E = <h, h> in require r : E * E in r");
  auto ds = infer_all(sig(), c, t0);
  REQUIRE(ds.size() == 1);
  CHECK_THROWS_AS(infer_all(sig(), c, normalize(t0)), TypeError);
  Term e = elaborate(sig(), *ds.front());
  CHECK(alpha_eq(normalize(e), t("<h, h>")));
  CHECK(check_all(sig(), c, normalize(e), ds.front()->type()).size() == 1);
}
