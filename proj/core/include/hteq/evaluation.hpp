#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hteq/syntax.hpp"

namespace hteq {

/// Bit i set iff the i-th atom of a Universe is present.
using AtomMask = std::uint32_t;

/// A finite, ordered set of atoms that indexes subsets as bitmasks.
class Universe {
 public:
  Universe() = default;
  explicit Universe(const AtomSet& atoms);

  std::size_t size() const noexcept { return atoms_.size(); }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  AtomMask full() const noexcept;

  std::optional<std::size_t> index_of(const Atom& a) const;
  /// Atoms outside the universe are ignored.
  AtomMask mask_of(const AtomSet& set) const;
  AtomSet set_of(AtomMask mask) const;

 private:
  std::vector<Atom> atoms_;
};

/// Iterates the submasks of `mask` in increasing numeric order, including 0
/// and `mask` itself.
template <class F>
void for_each_submask(AtomMask mask, F&& f) {
  AtomMask sub = 0;
  while (true) {
    f(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

/// Every subset of an n-atom universe as a mask, ordered by size and then
/// lexicographically on the sorted atoms (the order used for printed output).
std::vector<AtomMask> canonical_masks(std::size_t n);

/// True iff `a` precedes `b` in that order.
bool canonical_mask_less(AtomMask a, AtomMask b) noexcept;

/// A formula flattened to post-order with atoms resolved to universe indices,
/// evaluated bottom-up over an arbitrary semantic domain.
///
/// A Domain provides `value_type` and the members atom(i), top(), bot(),
/// negate(a), conj(a, b), disj(a, b), implies(a, b).
class CompiledFormula {
 public:
  /// Throws std::invalid_argument if an atom of `f` is not in `universe`.
  CompiledFormula(const Formula& f, const Universe& universe);

  template <class Domain>
  typename Domain::value_type evaluate(const Domain& d) const {
    using V = typename Domain::value_type;
    constexpr std::size_t inline_capacity = 64;
    std::array<V, inline_capacity> small{};
    std::unique_ptr<V[]> large;
    V* slots = small.data();
    if (code_.size() > inline_capacity) {
      large = std::make_unique<V[]>(code_.size());
      slots = large.get();
    }
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const Instr& in = code_[i];
      switch (in.op) {
        case Connective::atom: slots[i] = d.atom(in.atom); break;
        case Connective::top: slots[i] = d.top(); break;
        case Connective::bot: slots[i] = d.bot(); break;
        case Connective::negation: slots[i] = d.negate(slots[in.lhs]); break;
        case Connective::conjunction: slots[i] = d.conj(slots[in.lhs], slots[in.rhs]); break;
        case Connective::disjunction: slots[i] = d.disj(slots[in.lhs], slots[in.rhs]); break;
        case Connective::implication: slots[i] = d.implies(slots[in.lhs], slots[in.rhs]); break;
      }
    }
    return slots[code_.size() - 1];
  }

 private:
  struct Instr {
    Connective op;
    std::uint32_t lhs = 0;
    std::uint32_t rhs = 0;
    std::uint32_t atom = 0;
  };
  std::vector<Instr> code_;
};

/// Compiles every rule of a program (as formulas) against one universe.
std::vector<CompiledFormula> compile_program(const Program& p, const Universe& universe);

/// Two-valued evaluation in the classical world given by `world`.
struct ClassicalDomain {
  using value_type = bool;
  AtomMask world;

  bool atom(std::size_t i) const { return (world >> i) & 1U; }
  bool top() const { return true; }
  bool bot() const { return false; }
  bool negate(bool a) const { return !a; }
  bool conj(bool a, bool b) const { return a && b; }
  bool disj(bool a, bool b) const { return a || b; }
  bool implies(bool a, bool b) const { return !a || b; }
};

/// Forcing on the two-world frame h <= t: the value records whether the
/// formula is forced at h and at t.
struct HtValue {
  bool here = false;
  bool there = false;
  friend bool operator==(HtValue, HtValue) = default;
};

struct HtDomain {
  using value_type = HtValue;
  AtomMask here;
  AtomMask there;

  HtValue atom(std::size_t i) const { return {((here >> i) & 1U) != 0, ((there >> i) & 1U) != 0}; }
  HtValue top() const { return {true, true}; }
  HtValue bot() const { return {false, false}; }
  HtValue negate(HtValue a) const { return {!a.there, !a.there}; }
  HtValue conj(HtValue a, HtValue b) const { return {a.here && b.here, a.there && b.there}; }
  HtValue disj(HtValue a, HtValue b) const { return {a.here || b.here, a.there || b.there}; }
  HtValue implies(HtValue a, HtValue b) const {
    const bool there = !a.there || b.there;
    return {there && (!a.here || b.here), there};
  }
};

bool all_true(const std::vector<CompiledFormula>& rules, const ClassicalDomain& d);
bool all_forced_here(const std::vector<CompiledFormula>& rules, const HtDomain& d);

}  // namespace hteq
