#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hteq/syntax.hpp"

namespace hteq {

/// Seeded random formulas and programs. The same seed yields the same
/// sequence on every platform (no standard distributions are involved).
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, n).
  std::size_t below(std::size_t n);
  bool chance(std::size_t numerator, std::size_t denominator);

  /// A formula of depth at most `max_depth` over `atoms` using the connectives
  /// in `allowed` (top/bot appear as leaves only if allowed).
  Formula formula(const AtomSet& atoms, ConnectiveSet allowed, std::size_t max_depth);

  /// Between 1 and `max_rules` rules body -> head (or facts, about one in
  /// four) with bodies and heads from formula().
  Program rule_program(const AtomSet& atoms, ConnectiveSet allowed, std::size_t max_rules,
                       std::size_t max_depth);

  /// A program in {A -> B | A, B in [and, bot, top]}.
  Program horn_program(const AtomSet& atoms, std::size_t max_rules, std::size_t max_depth);

  /// The first `count` atoms of p, q, r, s, t, ...
  static AtomSet atoms(std::size_t count);

 private:
  std::mt19937_64 rng_;
};

/// Every formula of depth at most `max_depth` over `atoms` and the allowed
/// connectives, each syntactic tree once, shallower formulas first.
std::vector<Formula> enumerate_formulas(const AtomSet& atoms, ConnectiveSet allowed,
                                        std::size_t max_depth);

/// Number of formulas enumerate_formulas would return, without building them.
std::uint64_t count_formulas(std::size_t atoms, ConnectiveSet allowed, std::size_t max_depth);

}  // namespace hteq
