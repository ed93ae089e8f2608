#include "hteq/stable.hpp"

#include <algorithm>
#include <stdexcept>

#include "hteq/evaluation.hpp"

namespace hteq {

namespace {

void require_universe(const Program& p, const AtomSet& universe) {
  const AtomSet atoms = p.atoms();
  if (!std::includes(universe.begin(), universe.end(), atoms.begin(), atoms.end())) {
    throw std::invalid_argument("universe does not contain every atom of the program");
  }
}

Formula reduct_in(const Formula& f, const ClassicalWorld& x) {
  switch (f.kind()) {
    case Connective::atom:
    case Connective::top:
    case Connective::bot: return f;
    case Connective::negation:
      return eval_classical(x, f.operand()) ? Formula::bot() : Formula::top();
    case Connective::conjunction:
      return Formula::conjunction(reduct_in(f.lhs(), x), reduct_in(f.rhs(), x));
    case Connective::disjunction:
      return Formula::disjunction(reduct_in(f.lhs(), x), reduct_in(f.rhs(), x));
    case Connective::implication:
      return Formula::implication(reduct_in(f.lhs(), x), reduct_in(f.rhs(), x));
  }
  throw std::logic_error("reduct: unknown connective");
}

// Y ranges over the subsets of X; X is stable iff only X itself satisfies
// the reduct.
bool stable_under_reduct(const Program& p, AtomMask x, const Universe& u) {
  const Program px = reduct(p, u.set_of(x)).rules;
  const auto rules = compile_program(px, u);
  bool ok = true;
  for_each_submask(x, [&](AtomMask y) {
    if (ok && all_true(rules, ClassicalDomain{y}) != (y == x)) ok = false;
  });
  return ok;
}

AnswerSetReport make_report(const Program& p, const AtomSet& universe, AnswerSetMethod method,
                            const std::vector<AtomMask>& found, const Universe& u) {
  AnswerSetReport report{p, universe, {}, method};
  for (AtomMask x : found) report.answer_sets.push_back(u.set_of(x));
  return report;
}

}  // namespace

Formula reduct(const Formula& f, const ClassicalWorld& x) { return reduct_in(f, x); }

Rule reduct(const Rule& r, const ClassicalWorld& x) {
  return Rule(reduct_in(r.body(), x), reduct_in(r.head(), x));
}

Reduct reduct(const Program& p, const ClassicalWorld& x) {
  std::vector<Rule> rules;
  rules.reserve(p.size());
  for (const auto& r : p.rules()) rules.push_back(reduct(r, x));
  return Reduct{p, x, Program(std::move(rules), p.universe())};
}

std::string_view method_name(AnswerSetMethod m) noexcept {
  return m == AnswerSetMethod::reduct ? "reduct" : "equilibrium";
}

AnswerSetReport answer_sets_reduct(const Program& p, const AtomSet& universe,
                                   const Guard& guard) {
  require_universe(p, universe);
  guard.check("answer-set universe size", universe.size(), limits::ht_atoms);
  const Universe u(universe);
  std::vector<AtomMask> found;
  for (AtomMask x : canonical_masks(u.size())) {
    if (stable_under_reduct(p, x, u)) found.push_back(x);
  }
  return make_report(p, universe, AnswerSetMethod::reduct, found, u);
}

AnswerSetReport answer_sets_ht(const Program& p, const AtomSet& universe, const Guard& guard) {
  require_universe(p, universe);
  guard.check("answer-set universe size", universe.size(), limits::ht_atoms);
  const Universe u(universe);
  const auto rules = compile_program(p, u);
  std::vector<AtomMask> found;
  for (AtomMask x : canonical_masks(u.size())) {
    if (!all_forced_here(rules, HtDomain{x, x})) continue;
    bool equilibrium = true;
    for_each_submask(x, [&](AtomMask y) {
      if (equilibrium && y != x && all_forced_here(rules, HtDomain{y, x})) equilibrium = false;
    });
    if (equilibrium) found.push_back(x);
  }
  return make_report(p, universe, AnswerSetMethod::equilibrium, found, u);
}

AnswerSetReport answer_sets(const Program& p, AnswerSetMethod method, const Guard& guard) {
  return method == AnswerSetMethod::reduct ? answer_sets_reduct(p, p.universe(), guard)
                                           : answer_sets_ht(p, p.universe(), guard);
}

bool is_answer_set(const Program& p, const ClassicalWorld& x) {
  AtomSet universe = p.atoms();
  universe.insert(x.begin(), x.end());
  const Universe u(universe);
  return stable_under_reduct(p, u.mask_of(x), u);
}

}  // namespace hteq
