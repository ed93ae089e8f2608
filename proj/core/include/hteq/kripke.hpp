#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hteq/error.hpp"
#include "hteq/syntax.hpp"

namespace hteq {

using WorldId = std::size_t;
/// Bit w set iff world w is in the set.
using WorldMask = std::uint32_t;

/// A finite Kripke model: worlds 0..n-1, a preorder given by generating pairs
/// (stored as its reflexive-transitive closure) and an atom label per world.
/// Construction does not check the partial-order or monotonicity conditions;
/// call validate().
class KripkeModel {
 public:
  static constexpr std::size_t max_size = 32;

  /// Throws std::out_of_range for pairs naming unknown worlds and
  /// std::invalid_argument for more than max_size worlds.
  KripkeModel(std::vector<AtomSet> labels, const std::vector<std::pair<WorldId, WorldId>>& order);

  std::size_t world_count() const noexcept { return labels_.size(); }
  const AtomSet& label(WorldId w) const;
  const std::vector<AtomSet>& labels() const noexcept { return labels_; }
  bool leq(WorldId a, WorldId b) const;
  /// Worlds v with w <= v.
  WorldMask up(WorldId w) const;
  WorldMask all_worlds() const noexcept;

  std::vector<WorldId> terminal_nodes() const;
  bool single_top() const { return terminal_nodes().size() == 1; }
  /// The least world, if there is one.
  std::optional<WorldId> root() const;
  /// Pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<WorldId, WorldId>> covering_pairs() const;
  AtomSet atoms() const;

  friend bool operator==(const KripkeModel&, const KripkeModel&) = default;

 private:
  std::vector<AtomSet> labels_;
  std::vector<WorldMask> up_;
};

struct Violation {
  enum class Kind { reflexivity, antisymmetry, transitivity, monotonicity };
  Kind kind;
  WorldId first;
  WorldId second;

  std::string describe() const;
};

struct ValidationReport {
  std::optional<Violation> violation;
  bool ok() const noexcept { return !violation.has_value(); }
};

/// Checks that the order is a partial order and the labeling is monotone.
ValidationReport validate(const KripkeModel& m);

/// Set of worlds forcing `f`.
WorldMask forcing_set(const KripkeModel& m, const Formula& f);
/// w forces f. Throws std::out_of_range for an unknown world.
bool forces(const KripkeModel& m, WorldId w, const Formula& f);

namespace diamond {
inline constexpr WorldId w = 0;
inline constexpr WorldId u = 1;
inline constexpr WorldId v = 2;
inline constexpr WorldId t = 3;
}  // namespace diamond

/// w < u < t, w < v < t with labels w: {}, u: {p}, v: {q}, t: {p, q}.
KripkeModel diamond_model();

enum class FrameClass {
  any,
  single_top,  ///< exactly one terminal node
};

/// Visits every rooted model with at most `max_worlds` worlds labelled over
/// `atoms`, one per isomorphism class, in a deterministic order (by world
/// count, then frame, then labeling). Stops early when `visit` returns false.
/// The root is always world 0. Guarded at 5 worlds and 4 atoms.
void enumerate_models(std::size_t max_worlds, const AtomSet& atoms, FrameClass frames,
                      const std::function<bool(const KripkeModel&)>& visit,
                      const Guard& guard = {});

std::vector<KripkeModel> all_models(std::size_t max_worlds, const AtomSet& atoms,
                                    FrameClass frames, const Guard& guard = {});

/// Number of rooted frames (partial orders with a least element) on exactly
/// `worlds` worlds, up to isomorphism.
std::size_t rooted_frame_count(std::size_t worlds, FrameClass frames);

struct Countermodel {
  KripkeModel model;
  WorldId witness;
};

/// Searches rooted models of up to `max_worlds` worlds, smallest first, for a
/// world forcing every premise but not `goal`. nullopt only means that none
/// exists within the bound.
std::optional<Countermodel> countermodel_search(const std::vector<Formula>& premises,
                                                const Formula& goal, FrameClass frames,
                                                std::size_t max_worlds, const Guard& guard = {});

/// Checks a countermodel independently of how it was found: the model
/// validates, the witness forces every premise and does not force the goal.
bool is_countermodel(const Countermodel& cm, const std::vector<Formula>& premises,
                     const Formula& goal);

}  // namespace hteq
