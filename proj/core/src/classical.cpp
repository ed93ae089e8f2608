#include "hteq/classical.hpp"

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

AtomSet joint_atoms(const Program& p1, const Program& p2) {
  AtomSet u = p1.atoms();
  const AtomSet a2 = p2.atoms();
  u.insert(a2.begin(), a2.end());
  return u;
}

}  // namespace

bool eval_classical(const ClassicalWorld& world, const Formula& f) {
  const Universe u(f.atoms());
  return CompiledFormula(f, u).evaluate(ClassicalDomain{u.mask_of(world)});
}

bool eval_classical(const ClassicalWorld& world, const Rule& r) {
  return eval_classical(world, r.as_formula());
}

bool eval_classical(const ClassicalWorld& world, const Program& p) {
  return std::all_of(p.rules().begin(), p.rules().end(),
                     [&](const Rule& r) { return eval_classical(world, r); });
}

std::vector<ClassicalWorld> classical_models(const Program& p, const AtomSet& universe,
                                             const Guard& guard) {
  require_universe(p, universe);
  guard.check("classical universe size", universe.size(), limits::classical_atoms);
  const Universe u(universe);
  const auto rules = compile_program(p, u);
  std::vector<ClassicalWorld> out;
  for_each_submask(u.full(), [&](AtomMask x) {
    if (all_true(rules, ClassicalDomain{x})) out.push_back(u.set_of(x));
  });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::optional<ClassicalWorld> models_intersection(const Program& p, const Guard& guard) {
  guard.check("classical universe size", p.universe().size(), limits::classical_atoms);
  const Universe u(p.universe());
  const auto rules = compile_program(p, u);
  std::optional<AtomMask> meet;
  for_each_submask(u.full(), [&](AtomMask x) {
    if (all_true(rules, ClassicalDomain{x})) meet = meet ? (*meet & x) : x;
  });
  if (!meet) return std::nullopt;
  return u.set_of(*meet);
}

MinimalModel minimal_model(const Program& p, const Guard& guard) {
  if (!fragment_check(p, fragments::horn_rules())) {
    throw FragmentError("minimal_model requires rules A -> B with A, B in [and, bot, top]");
  }
  MinimalModel result{models_intersection(p, guard)};
  if (result.model && !eval_classical(*result.model, p)) {
    throw std::logic_error("intersection of models is not a model of a Horn-fragment program");
  }
  return result;
}

std::optional<ClassicalWorld> cpl_separating_world(const Program& p1, const Program& p2,
                                                   const Guard& guard) {
  const AtomSet joint = joint_atoms(p1, p2);
  guard.check("classical universe size", joint.size(), limits::classical_atoms);
  const Universe u(joint);
  const auto r1 = compile_program(p1, u);
  const auto r2 = compile_program(p2, u);
  std::optional<ClassicalWorld> witness;
  for_each_submask(u.full(), [&](AtomMask x) {
    if (!witness && all_true(r1, ClassicalDomain{x}) != all_true(r2, ClassicalDomain{x})) {
      witness = u.set_of(x);
    }
  });
  return witness;
}

bool cpl_equivalent(const Program& p1, const Program& p2, const Guard& guard) {
  return !cpl_separating_world(p1, p2, guard).has_value();
}

bool cpl_entails(const std::vector<Formula>& premises, const Formula& goal, const Guard& guard) {
  AtomSet joint = goal.atoms();
  for (const auto& f : premises) f.collect_atoms(joint);
  guard.check("classical universe size", joint.size(), limits::classical_atoms);
  const Universe u(joint);
  std::vector<CompiledFormula> prem;
  for (const auto& f : premises) prem.emplace_back(f, u);
  const CompiledFormula g(goal, u);
  bool entailed = true;
  for_each_submask(u.full(), [&](AtomMask x) {
    const ClassicalDomain d{x};
    if (entailed && all_true(prem, d) && !g.evaluate(d)) entailed = false;
  });
  return entailed;
}

}  // namespace hteq
