#include "presup/solver.hpp"

#include <algorithm>
#include <deque>

#include "presup/evaluator.hpp"

namespace presup {

namespace {

struct Pending {
  Spine spine;
  std::size_t length;
};

void expand_head(const Context& ctx, Spine head, std::size_t depth, std::size_t budget,
                 std::vector<Spine>& out) {
  std::deque<Pending> queue;
  queue.push_back({std::move(head), 0});
  while (!queue.empty()) {
    Pending cur = std::move(queue.front());
    queue.pop_front();
    const Term sigma = cur.spine.type;
    const Term term = cur.spine.term;
    const DerivationPtr deriv = cur.spine.derivation;
    out.push_back(std::move(cur.spine));
    if (cur.length >= depth || !sigma.is(Kind::Sigma)) continue;

    Term fst = make_fst(term);
    Term fst_type = sigma.domain();
    queue.push_back({{fst, fst_type, make_derivation(Rule::SigE1, {ctx, fst, fst_type}, {deriv})},
                     cur.length + 1});

    Term snd = make_snd(term);
    Term snd_type = normalize(substitute(sigma.codomain(), sigma.binder(), fst), budget);
    queue.push_back({{snd, snd_type, make_derivation(Rule::SigE2, {ctx, snd, snd_type}, {deriv})},
                     cur.length + 1});
  }
}

} // namespace

std::vector<Spine> spines(const Signature& sig, const Context& ctx, std::size_t depth, std::size_t step_budget) {
  std::vector<Spine> out;
  const auto& hyps = ctx.entries();
  for (auto it = hyps.rbegin(); it != hyps.rend(); ++it) {
    // Shadowed hypotheses are unreachable by name.
    if (ctx.lookup(it->name) != &it->type) continue;
    Term head = make_var(it->name);
    expand_head(ctx,
                {head, normalize(it->type, step_budget), make_derivation(Rule::Hyp, {ctx, head, it->type})},
                depth, step_budget, out);
  }
  for (const auto& entry : sig.entries()) {
    Term head = make_const(entry.name);
    expand_head(ctx,
                {head, normalize(entry.type, step_budget), make_derivation(Rule::Const, {ctx, head, entry.type})},
                depth, step_budget, out);
  }
  return out;
}

std::vector<std::pair<Term, Term>> enumerate_spines(const Signature& sig, const Context& ctx, std::size_t depth) {
  std::vector<std::pair<Term, Term>> out;
  for (auto& s : spines(sig, ctx, depth)) out.emplace_back(std::move(s.term), std::move(s.type));
  return out;
}

std::vector<Solution> solve(const Signature& sig, const Context& ctx, const Term& goal, const CheckConfig& cfg) {
  const Term target = normalize(goal, cfg.step_budget);
  std::vector<Solution> out;
  for (auto& s : spines(sig, ctx, cfg.solver_depth, cfg.step_budget)) {
    if (!alpha_eq(s.type, target)) continue;
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const Solution& sol) { return alpha_eq(sol.witness, s.term); });
    if (seen) continue;
    DerivationPtr d = s.derivation;
    if (!alpha_eq(d->type(), goal)) d = make_derivation(Rule::Conv, {ctx, s.term, goal}, {d});
    out.push_back({s.term, std::move(d)});
    if (out.size() >= cfg.max_solutions_per_require) break;
  }
  return out;
}

} // namespace presup
