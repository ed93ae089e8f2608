#pragma once

#include <optional>
#include <vector>

#include "hteq/error.hpp"
#include "hteq/syntax.hpp"

namespace hteq {

/// A classical valuation: exactly the listed atoms are true.
using ClassicalWorld = AtomSet;

bool eval_classical(const ClassicalWorld& world, const Formula& f);
bool eval_classical(const ClassicalWorld& world, const Rule& r);
bool eval_classical(const ClassicalWorld& world, const Program& p);

/// Every X subset of `universe` satisfying all rules, in canonical order
/// (by size, then lexicographically). `universe` must contain atoms(p).
std::vector<ClassicalWorld> classical_models(const Program& p, const AtomSet& universe,
                                             const Guard& guard = {});

/// Intersection of all classical models of `p` over its universe, or nullopt
/// when `p` has none. Defined for any program.
std::optional<ClassicalWorld> models_intersection(const Program& p, const Guard& guard = {});

struct MinimalModel {
  std::optional<ClassicalWorld> model;  ///< nullopt: the program is unsatisfiable
  bool satisfiable() const noexcept { return model.has_value(); }
};

/// Least model of a program in {A -> B | A, B in [and, bot, top]}.
/// Throws FragmentError outside that fragment; unsatisfiability is reported
/// in the result.
MinimalModel minimal_model(const Program& p, const Guard& guard = {});

/// Equal classical model sets over atoms(p1) + atoms(p2).
bool cpl_equivalent(const Program& p1, const Program& p2, const Guard& guard = {});

/// A world over atoms(p1) + atoms(p2) satisfying exactly one of the programs.
std::optional<ClassicalWorld> cpl_separating_world(const Program& p1, const Program& p2,
                                                   const Guard& guard = {});

/// Every valuation over the joint atoms satisfying `premises` satisfies `goal`.
bool cpl_entails(const std::vector<Formula>& premises, const Formula& goal,
                 const Guard& guard = {});

}  // namespace hteq
