#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hteq/error.hpp"
#include "hteq/kripke.hpp"
#include "hteq/syntax.hpp"

namespace hteq {

/// The here-and-there model <Y, X>: worlds h <= t labelled Y (here) and
/// X (there), with Y a subset of X.
class HTModel {
 public:
  /// Throws std::invalid_argument unless here is a subset of there.
  HTModel(AtomSet here, AtomSet there);

  const AtomSet& here() const noexcept { return here_; }
  const AtomSet& there() const noexcept { return there_; }
  bool total() const noexcept { return here_ == there_; }

  /// World 0 is h, world 1 is t.
  KripkeModel as_kripke() const;

  friend bool operator==(const HTModel&, const HTModel&) = default;
  /// Canonical order of `there`, then of `here`.
  friend std::strong_ordering operator<=>(const HTModel& a, const HTModel& b);

 private:
  AtomSet here_;
  AtomSet there_;
};

enum class HtWorld { here, there };

bool ht_forces(const HTModel& m, HtWorld at, const Formula& f);
/// Every rule of `p` is forced at h.
bool ht_satisfies(const HTModel& m, const Program& p);

/// Truth values of the three-valued Goedel matrix, ordered zero < half < one.
enum class G3Value : std::uint8_t { zero = 0, half = 1, one = 2 };

/// Atoms missing from the map take the value zero.
using G3Valuation = std::map<Atom, G3Value>;

G3Value matrix_eval(const G3Valuation& v, const Formula& f);

/// one for atoms in Y, half for atoms in X \ Y, zero otherwise.
G3Valuation valuation_of(const HTModel& m);
HTModel model_of(const G3Valuation& v);

/// Every <Y, X> with Y within X within `universe` forcing all rules of `p` at
/// h, ordered as HTModel. `universe` must contain atoms(p).
std::vector<HTModel> ht_models_of(const Program& p, const AtomSet& universe,
                                  const Guard& guard = {});

/// An HT model over the joint atoms forcing every premise at h but not `goal`.
std::optional<HTModel> g3_countermodel(const std::vector<Formula>& premises, const Formula& goal,
                                       const Guard& guard = {});
bool g3_entails(const std::vector<Formula>& premises, const Formula& goal,
                const Guard& guard = {});
/// Valid in every HT model, i.e. takes value one under every G3 valuation.
bool g3_valid(const Formula& f, const Guard& guard = {});

/// An HT model over atoms(p1) + atoms(p2) satisfying exactly one program.
/// Total models <X, X> are tried first, so programs that differ classically
/// are separated by their first classical separating world.
std::optional<HTModel> g3_separating_model(const Program& p1, const Program& p2,
                                           const Guard& guard = {});
bool g3_equivalent(const Program& p1, const Program& p2, const Guard& guard = {});

}  // namespace hteq
