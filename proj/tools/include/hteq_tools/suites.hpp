#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <hteq/syntax.hpp>

namespace hteq::suite {

inline constexpr std::uint64_t default_seed = 1729;

struct Outcome {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string first_violation;
  std::string info;  ///< extra counts worth reporting

  bool passed() const noexcept { return violations == 0 && checked > 0; }
  void fail(std::string what);
};

/// Representatives of every formula of depth <= `max_depth` over `atoms`
/// and `allowed`, one per value of `key`. `key` must be compositional (the
/// key of a compound formula is fixed by the keys of its parts); then every
/// formula in range shares its key with some representative, and any
/// property that depends only on the key holds for all of them once it holds
/// for the representatives.
std::vector<Formula> key_classes(const AtomSet& atoms, ConnectiveSet allowed,
                                 std::size_t max_depth,
                                 const std::function<std::uint64_t(const Formula&)>& key);

// Exhaustive semantic checks. Each works model by model: within one model
// the value of a formula depends only on the values of its parts there, so a
// handful of representatives stands for every formula up to the depth bound.

/// w <= v and w forces A imply v forces A; every model of <= 3 worlds over
/// {p, q, r}, every formula of depth <= 4.
Outcome persistence();
/// For A in [and, or, bot, top]: forcing at w equals classical truth in the
/// label of w, and forcing A -> B implies classical truth of A -> B.
Outcome forcing_matches_classical_on_positive_fragment();
/// For A, B in [and, or, bot, top]: <Y, X> forces A -> B iff both <X> and
/// <Y> classically satisfy it.
Outcome ht_implication_splits();
/// <Y, X> forces A iff it forces the reduct A^X, at both worlds.
Outcome reduct_preserves_ht_forcing();
/// Matrix value one iff forced at h; at least half iff forced at t.
Outcome matrix_matches_ht();
/// One-world models agree with classical evaluation.
Outcome one_world_matches_classical();
/// Every single-top model of <= 5 worlds over {p, q} forces
/// not A | not not A for every A of depth <= 3.
Outcome single_top_forces_weak_excluded_middle();
/// The four G3 axiom schemes take value one under every valuation of
/// distinct atoms, are classically valid and G3-valid, and none is
/// intuitionistically provable.
Outcome g3_axioms();
/// In the diamond model, w forces A iff u and v both force A, for every
/// formula in [and, ->, not] over {p, q} of depth <= 3 (checked one by one).
Outcome diamond_property();

// Seeded random checks.

/// answer_sets_reduct = answer_sets_ht on programs in the [and, or, not]
/// rule fragment (<= 4 atoms, <= 4 rules, depth <= 3).
Outcome method_agreement(std::uint64_t seed, std::size_t count);
/// G3 strong equivalence agrees with the unary extension oracle
/// (pairs over <= 3 atoms).
Outcome oracle_agreement(std::uint64_t seed, std::size_t count, std::size_t threads = 1);
/// The intersection of the classical models of a satisfiable Horn-fragment
/// program (<= 5 atoms) is a model.
Outcome horn_intersection_is_model(std::uint64_t seed, std::size_t count);
/// CPL and IPL entailment coincide for negation-free rules.
Outcome cpl_matches_ipl_on_negation_free(std::uint64_t seed, std::size_t count);
/// kc_decide is exact and agrees with g3_entails on the program fragment.
Outcome kc_matches_g3_on_fragment(std::uint64_t seed, std::size_t count);

/// The four G3 axiom schemes instantiated with distinct atoms.
std::vector<Formula> g3_axiom_instances();

}  // namespace hteq::suite
