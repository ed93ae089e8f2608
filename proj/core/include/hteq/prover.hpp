#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hteq/error.hpp"
#include "hteq/kripke.hpp"
#include "hteq/syntax.hpp"

namespace hteq {

/// Antecedents are kept as a set; contraction is admissible in the calculus
/// used here, so nothing is lost.
struct Sequent {
  std::set<Formula> antecedents;
  Formula succedent;

  friend bool operator==(const Sequent&, const Sequent&) = default;
  friend std::strong_ordering operator<=>(const Sequent& a, const Sequent& b);
};

std::string render(const Sequent& s);

/// One inference: the rule name, its conclusion, the principal formula (if
/// the rule has one) and the derivations of its premises. Proof search works
/// on `not A` read as `A -> bot`, so traces show negations in that form.
///
/// Rules: id, botL, topR, topL, andL, orL, andR, impR, orR1, orR2, atomImpL,
/// topImpL, botImpL, andImpL, orImpL, impImpL (contraction-free calculus for
/// intuitionistic logic), plus `wem`, whose single premise is the same sequent
/// with weak excluded middle instances adjoined, and `g3` leaves for verdicts
/// taken from the three-valued semantics.
struct Derivation {
  std::string rule;
  Sequent sequent;
  std::optional<Formula> principal;
  std::vector<Derivation> premises;

  std::size_t node_count() const;
};

/// Checks every inference of `d` against the rule it names. Nodes labelled
/// `g3` are accepted as leaves only if their sequent is G3-valid.
bool replay(const Derivation& d);

/// Rewrites every `not A` into `A -> bot`.
Formula desugar_negation(const Formula& f);

/// A derivation of premises |- goal in intuitionistic logic, if one exists.
/// The contraction-free calculus terminates on its own; `node_budget` (0 for
/// none) only caps the work spent.
struct SearchOutcome {
  std::optional<Derivation> derivation;
  bool exhausted = false;  ///< the budget ran out before a decision
};
SearchOutcome ipl_search(const std::vector<Formula>& premises, const Formula& goal,
                         std::size_t node_budget = 0);

struct Verdict {
  enum class Kind { provable, refuted, unknown };

  Kind kind = Kind::unknown;
  std::optional<Derivation> derivation;    ///< with provable
  std::optional<Countermodel> countermodel;  ///< with refuted, when a witness was found
  std::string note;

  bool provable() const noexcept { return kind == Kind::provable; }
  bool refuted() const noexcept { return kind == Kind::refuted; }
  bool unknown() const noexcept { return kind == Kind::unknown; }
};

std::string_view kind_name(Verdict::Kind k) noexcept;

/// Decides intuitionistic derivability. A refutation carries the smallest
/// rooted countermodel with at most `witness_bound` worlds; the verdict
/// stands even when none is found within that bound. Guarded on the total
/// size of the query.
Verdict ipl_decide(const std::vector<Formula>& premises, const Formula& goal,
                   std::size_t witness_bound = 5, const Guard& guard = {});

/// KC derivability. When every formula is an implication A -> B or a plain
/// formula with A, B in [and, or, not, top, bot], the answer is exact (KC and
/// G3 agree there). Otherwise: provable if intuitionistic search succeeds with
/// weak excluded middle instances for every subformula adjoined, refuted if a
/// single-top countermodel with at most `model_bound` worlds exists, and
/// unknown otherwise.
Verdict kc_decide(const std::vector<Formula>& premises, const Formula& goal,
                  std::size_t model_bound = 5, const Guard& guard = {});

/// G3 derivability by HT models. A refutation carries the HT countermodel as
/// a two-world chain with witness h.
Verdict g3_decide(const std::vector<Formula>& premises, const Formula& goal,
                  const Guard& guard = {});

/// True iff `f` belongs to the KC/G3 agreement fragment used by kc_decide.
bool in_kc_fragment(const Formula& f);

/// The instance A = p, B = not p | not not p, C = not p, D = bot of
/// (A & C -> D) & (not A -> B) & (not C -> B) -> (not D -> B): every
/// antecedent and not D are intuitionistically provable, B follows from them
/// and the axiom, and B alone is not provable.
bool check_normkc_instance();

}  // namespace hteq
