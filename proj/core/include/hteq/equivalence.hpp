#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hteq/classical.hpp"
#include "hteq/error.hpp"
#include "hteq/ht.hpp"
#include "hteq/syntax.hpp"

namespace hteq {

struct StrongEquivalence {
  bool equivalent = false;
  std::optional<HTModel> witness;  ///< satisfies exactly one program
};

/// G3 equivalence of two programs in fragments::program_rules().
/// Throws FragmentError outside it.
StrongEquivalence strongly_equivalent(const Program& p1, const Program& p2,
                                      const Guard& guard = {});

/// Rules `a` (facts) and `a -> b` for atoms a, b of `universe`: facts first,
/// then implications by body, then head.
std::vector<Rule> unary_rules(const AtomSet& universe);

struct OracleOptions {
  std::size_t threads = 1;
  Guard guard;
};

struct OracleResult {
  bool equivalent = false;
  /// Smallest separating extension: fewest rules, then the lowest index
  /// set in unary_rules order.
  std::optional<Program> separating_extension;
};

/// Compares answer sets (reduct definition) of p1 + E and p2 + E for every
/// set E of unary rules over `universe`. Guarded at 4 atoms.
OracleResult strong_equiv_oracle(const Program& p1, const Program& p2, const AtomSet& universe,
                                 const OracleOptions& options = {});

/// CPL equivalence, which decides strong equivalence on
/// fragments::negation_free_rules(). Throws FragmentError outside it.
bool negfree_strong_equiv(const Program& p1, const Program& p2, const Guard& guard = {});

struct EquivalenceReport {
  bool cpl = false;
  bool g3 = false;
  /// Present only when both programs lie in fragments::program_rules(),
  /// where KC and G3 coincide.
  std::optional<bool> kc_on_fragment;
  bool same_answer_sets = false;
  bool strongly_equivalent = false;
  std::optional<Program> separating_extension;
  std::optional<HTModel> separating_ht_model;
  std::optional<ClassicalWorld> separating_world;
};

/// Runs every check over the joint atoms. The separating extension is only
/// searched for when the joint universe is within the oracle guard.
EquivalenceReport classify(const Program& p1, const Program& p2, const Guard& guard = {},
                           std::size_t threads = 1);

struct ExpressibilityResult {
  std::optional<Program> program;       ///< G3-equivalent to the target
  std::size_t distinct_formulas = 0;    ///< semantic classes of bodies/heads
  std::size_t distinct_rules = 0;       ///< semantic classes of candidate rules
};

/// Searches programs in `frag` over the target's universe whose bodies and
/// heads have depth at most `max_depth`. Formulas are deduplicated by their
/// values on all HT models, rules by their model sets. Because a program's
/// models are the intersection of its rules' models, a program exists iff
/// the rules valid on every model of the target cut out exactly its models.
ExpressibilityResult expressibility_search(const Program& target, const FragmentDescriptor& frag,
                                           std::size_t max_depth, const Guard& guard = {});

}  // namespace hteq
