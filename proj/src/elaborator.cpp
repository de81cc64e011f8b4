#include "presup/elaborator.hpp"

#include <cassert>

namespace presup {

namespace {

const Binding& last_binding(const Derivation& premise) {
  assert(!premise.ctx().empty());
  return premise.ctx().entries().back();
}

} // namespace

Term elaborate_unchecked(const Derivation& d) {
  auto sub = [&](std::size_t i) { return elaborate_unchecked(*d.premises.at(i)); };
  switch (d.rule) {
    case Rule::Const:
    case Rule::Hyp:
    case Rule::Cumulativity:
      return d.subject();
    case Rule::PiF:
      return make_pi(last_binding(*d.premises[1]).name, sub(0), sub(1));
    case Rule::SigF:
      return make_sigma(last_binding(*d.premises[1]).name, sub(0), sub(1));
    case Rule::PiI:
      return make_lam(last_binding(*d.premises[0]).name, sub(0));
    case Rule::PiE:
      return make_app(sub(0), sub(1));
    case Rule::SigI:
      return make_pair(sub(0), sub(1));
    case Rule::SigE1:
      return make_fst(sub(0));
    case Rule::SigE2:
      return make_snd(sub(0));
    case Rule::Let: {
      const Binding& b = last_binding(*d.premises[1]);
      return make_let(b.name, b.type, sub(0), sub(1));
    }
    case Rule::Conv:
      return sub(0);
    case Rule::Require:
      // The witness is already substituted into the body's derivation.
      return sub(1);
  }
  return d.subject();
}

Term elaborate(const Signature& sig, const Derivation& d, std::size_t step_budget) {
  if (auto problem = find_invalid(sig, d, step_budget)) {
    throw TypeError(TypeErrorKind::InvalidDerivation, "invalid derivation: " + *problem, d.subject());
  }
  return elaborate_unchecked(d);
}

std::vector<Elaboration> elaborate_all(const Signature& sig, const Context& ctx, const Term& t,
                                       const CheckConfig& cfg) {
  std::vector<Elaboration> out;
  for (const auto& d : infer_all(sig, ctx, t, cfg)) {
    out.push_back({elaborate(sig, *d, cfg.step_budget), d->type(), d});
  }
  return out;
}

} // namespace presup
