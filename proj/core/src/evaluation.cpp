#include "hteq/evaluation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hteq/error.hpp"

namespace hteq {

Universe::Universe(const AtomSet& atoms) : atoms_(atoms.begin(), atoms.end()) {
  if (atoms_.size() > limits::max_universe) {
    throw std::invalid_argument("universe of " + std::to_string(atoms_.size()) +
                                " atoms exceeds the supported maximum of " +
                                std::to_string(limits::max_universe));
  }
}

AtomMask Universe::full() const noexcept {
  return atoms_.empty() ? 0U : static_cast<AtomMask>((std::uint64_t{1} << atoms_.size()) - 1);
}

std::optional<std::size_t> Universe::index_of(const Atom& a) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
  if (it == atoms_.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

AtomMask Universe::mask_of(const AtomSet& set) const {
  AtomMask m = 0;
  for (const auto& a : set) {
    if (auto i = index_of(a)) m |= AtomMask{1} << *i;
  }
  return m;
}

AtomSet Universe::set_of(AtomMask mask) const {
  AtomSet out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if ((mask >> i) & 1U) out.insert(atoms_[i]);
  }
  return out;
}

bool canonical_mask_less(AtomMask a, AtomMask b) noexcept {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  const AtomMask diff = a ^ b;
  return diff != 0 && (a & diff & -diff) != 0;
}

std::vector<AtomMask> canonical_masks(std::size_t n) {
  if (n > limits::max_universe) throw std::invalid_argument("canonical_masks: universe too large");
  std::vector<AtomMask> out(std::size_t{1} << n);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<AtomMask>(i);
  std::sort(out.begin(), out.end(), canonical_mask_less);
  return out;
}

namespace {

template <class Emit>
std::uint32_t flatten(const Formula& f, const Universe& u, Emit& emit) {
  switch (f.kind()) {
    case Connective::atom: {
      auto i = u.index_of(f.symbol());
      if (!i) throw std::invalid_argument("atom '" + f.symbol().name() + "' is not in the universe");
      return emit(Connective::atom, 0, 0, static_cast<std::uint32_t>(*i));
    }
    case Connective::top:
    case Connective::bot: return emit(f.kind(), 0, 0, 0);
    case Connective::negation: {
      auto a = flatten(f.operand(), u, emit);
      return emit(Connective::negation, a, 0, 0);
    }
    default: {
      auto a = flatten(f.lhs(), u, emit);
      auto b = flatten(f.rhs(), u, emit);
      return emit(f.kind(), a, b, 0);
    }
  }
}

}  // namespace

CompiledFormula::CompiledFormula(const Formula& f, const Universe& universe) {
  code_.reserve(f.size());
  auto emit = [this](Connective op, std::uint32_t l, std::uint32_t r, std::uint32_t atom) {
    code_.push_back(Instr{op, l, r, atom});
    return static_cast<std::uint32_t>(code_.size() - 1);
  };
  flatten(f, universe, emit);
}

std::vector<CompiledFormula> compile_program(const Program& p, const Universe& universe) {
  std::vector<CompiledFormula> out;
  out.reserve(p.size());
  for (const auto& r : p.rules()) out.emplace_back(r.as_formula(), universe);
  return out;
}

bool all_true(const std::vector<CompiledFormula>& rules, const ClassicalDomain& d) {
  return std::all_of(rules.begin(), rules.end(),
                     [&](const CompiledFormula& r) { return r.evaluate(d); });
}

bool all_forced_here(const std::vector<CompiledFormula>& rules, const HtDomain& d) {
  return std::all_of(rules.begin(), rules.end(),
                     [&](const CompiledFormula& r) { return r.evaluate(d).here; });
}

}  // namespace hteq
