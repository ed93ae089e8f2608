#include "hteq/generate.hpp"

#include <stdexcept>

namespace hteq {

namespace {

constexpr const char* atom_names[] = {"p", "q", "r", "s", "t", "u", "v", "w"};

std::vector<Connective> binary_ops(ConnectiveSet allowed) {
  std::vector<Connective> out;
  for (auto c : {Connective::conjunction, Connective::disjunction, Connective::implication}) {
    if (allowed.contains(c)) out.push_back(c);
  }
  return out;
}

Formula combine(Connective c, const Formula& a, const Formula& b) {
  switch (c) {
    case Connective::conjunction: return Formula::conjunction(a, b);
    case Connective::disjunction: return Formula::disjunction(a, b);
    default: return Formula::implication(a, b);
  }
}

}  // namespace

std::size_t Generator::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Generator::below: empty range");
  return static_cast<std::size_t>(rng_() % n);
}

bool Generator::chance(std::size_t numerator, std::size_t denominator) {
  return below(denominator) < numerator;
}

Formula Generator::formula(const AtomSet& atoms, ConnectiveSet allowed, std::size_t max_depth) {
  std::vector<Formula> leaves;
  for (const auto& a : atoms) leaves.push_back(Formula::atom(a));
  if (allowed.contains(Connective::top)) leaves.push_back(Formula::top());
  if (allowed.contains(Connective::bot)) leaves.push_back(Formula::bot());
  if (leaves.empty()) throw std::invalid_argument("Generator::formula: no atoms or constants");

  const auto binary = binary_ops(allowed);
  const bool negation = allowed.contains(Connective::negation);
  const std::size_t ops = binary.size() + (negation ? 1 : 0);
  if (max_depth == 0 || ops == 0 || chance(1, 3)) {
    // Constants are rarer than atoms.
    const std::size_t n_atoms = atoms.size();
    if (n_atoms > 0 && (leaves.size() == n_atoms || !chance(1, 6))) return leaves[below(n_atoms)];
    return leaves[n_atoms + below(leaves.size() - n_atoms)];
  }
  const std::size_t pick = below(ops);
  if (pick == binary.size()) return Formula::negation(formula(atoms, allowed, max_depth - 1));
  Formula lhs = formula(atoms, allowed, max_depth - 1);
  Formula rhs = formula(atoms, allowed, max_depth - 1);
  return combine(binary[pick], lhs, rhs);
}

Program Generator::rule_program(const AtomSet& atoms, ConnectiveSet allowed,
                                std::size_t max_rules, std::size_t max_depth) {
  const std::size_t n = 1 + below(max_rules);
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < n; ++i) {
    Formula head = formula(atoms, allowed, max_depth);
    if (chance(1, 4)) {
      rules.push_back(Rule::fact(std::move(head)));
    } else {
      Formula body = formula(atoms, allowed, max_depth);
      rules.emplace_back(std::move(body), std::move(head));
    }
  }
  return Program(std::move(rules));
}

Program Generator::horn_program(const AtomSet& atoms, std::size_t max_rules,
                                std::size_t max_depth) {
  const ConnectiveSet horn{Connective::conjunction, Connective::top, Connective::bot};
  return rule_program(atoms, horn, max_rules, max_depth);
}

AtomSet Generator::atoms(std::size_t count) {
  if (count > std::size(atom_names)) throw std::invalid_argument("Generator::atoms: too many");
  AtomSet out;
  for (std::size_t i = 0; i < count; ++i) out.insert(Atom(atom_names[i]));
  return out;
}

std::vector<Formula> enumerate_formulas(const AtomSet& atoms, ConnectiveSet allowed,
                                        std::size_t max_depth) {
  std::vector<Formula> all;
  for (const auto& a : atoms) all.push_back(Formula::atom(a));
  if (allowed.contains(Connective::top)) all.push_back(Formula::top());
  if (allowed.contains(Connective::bot)) all.push_back(Formula::bot());
  const auto binary = binary_ops(allowed);
  std::size_t previous = 0;  // formulas of depth < d-1 are all[0, previous)
  for (std::size_t d = 1; d <= max_depth; ++d) {
    const std::size_t shallower = all.size();  // depth <= d-1
    if (allowed.contains(Connective::negation)) {
      for (std::size_t i = previous; i < shallower; ++i) all.push_back(Formula::negation(all[i]));
    }
    // At least one operand has depth exactly d-1.
    for (auto c : binary) {
      for (std::size_t i = 0; i < shallower; ++i) {
        for (std::size_t j = (i < previous ? previous : 0); j < shallower; ++j) {
          all.push_back(combine(c, all[i], all[j]));
        }
      }
    }
    previous = shallower;
  }
  return all;
}

std::uint64_t count_formulas(std::size_t atoms, ConnectiveSet allowed, std::size_t max_depth) {
  std::uint64_t leaves = atoms + (allowed.contains(Connective::top) ? 1 : 0) +
                         (allowed.contains(Connective::bot) ? 1 : 0);
  const std::uint64_t b = binary_ops(allowed).size();
  const std::uint64_t neg = allowed.contains(Connective::negation) ? 1 : 0;
  std::uint64_t upto = leaves;  // depth <= d
  std::uint64_t below = 0;      // depth <= d-1
  for (std::size_t d = 1; d <= max_depth; ++d) {
    const std::uint64_t exact_prev = upto - below;
    const std::uint64_t fresh = neg * exact_prev + b * (upto * upto - below * below);
    below = upto;
    upto += fresh;
  }
  return upto;
}

}  // namespace hteq
