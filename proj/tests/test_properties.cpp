#include "doctest.h"
#include "support/properties.hpp"
#include "support/terms.hpp"

namespace {

void require_clean(const props::Report& r) {
  for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 5); ++i) MESSAGE(r.failures[i]);
  CHECK(r.cases > 0);
  CHECK(r.failures.empty());
}

} // namespace

TEST_CASE("generated terms are well-typed") {
  gen::Generator g(11);
  for (int i = 0; i < 200; ++i) {
    gen::Sample s = gen::sample(g, 5);
    CAPTURE(s.term);
    CAPTURE(s.type);
    CHECK_NOTHROW(presup::check_context(presup::base_signature(), s.ctx));
    CHECK_FALSE(presup::check_all(presup::base_signature(), s.ctx, s.term, s.type).empty());
  }
}

TEST_CASE("elaboration preserves types") { require_clean(props::type_preservation(200, 101)); }

TEST_CASE("solver agrees with brute-force enumeration") { require_clean(props::solver_oracle(50, 202)); }

TEST_CASE("eliminations are sound") { require_clean(props::elimination_soundness(100, 303)); }

TEST_CASE("normalization preserves types on the corpus") { require_clean(props::normalization_preserves_type()); }

TEST_CASE("every derivation the checker builds validates") {
  gen::Generator g(404);
  for (int i = 0; i < 100; ++i) {
    gen::Sample s = gen::sample(g, 4);
    for (const auto& d : presup::check_all(presup::base_signature(), s.ctx, s.term, s.type)) {
      auto bad = presup::find_invalid(presup::base_signature(), *d);
      CHECK_MESSAGE(!bad, *bad);
    }
  }
}

namespace {

// An alpha-variant of t with every binder renamed.
presup::Term rename_binders(const presup::Term& t, int& counter) {
  using namespace presup;
  std::array<Term, 3> kids{};
  for (std::size_t i = 0; i < t.arity(); ++i) kids[i] = rename_binders(t.child(i), counter);
  if (!t.binds()) return t.arity() ? t.with_children(kids) : t;
  const std::string name = "b" + std::to_string(counter++);
  const std::size_t scope = t.is(Kind::Lam) ? 0 : t.is(Kind::Let) ? 2 : 1;
  kids[scope] = substitute(kids[scope], t.binder(), make_var(name));
  return t.with_binder(name, kids);
}

} // namespace

TEST_CASE("results do not depend on bound-name choices") {
  gen::Generator g(505);
  for (int i = 0; i < 100; ++i) {
    gen::Sample s = gen::sample(g, 4);
    int counter = 0;
    presup::Term variant = rename_binders(s.term, counter);
    CAPTURE(s.term);
    CAPTURE(variant);
    REQUIRE(presup::alpha_eq(variant, s.term));
    auto a = presup::check_all(presup::base_signature(), s.ctx, s.term, s.type);
    auto b = presup::check_all(presup::base_signature(), s.ctx, variant, s.type);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(presup::alpha_eq(presup::elaborate(presup::base_signature(), *a[k]),
                             presup::elaborate(presup::base_signature(), *b[k])));
    }
    CHECK(presup::alpha_eq(presup::normalize(s.term), presup::normalize(variant)));
  }
}
