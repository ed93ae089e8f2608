#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hteq {

/// A propositional atom. Names follow `[a-z][a-zA-Z0-9_]*` and may not be a
/// reserved word (`top`, `bot`, `not`).
class Atom {
 public:
  explicit Atom(std::string name);

  static bool is_valid_name(std::string_view name) noexcept;

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;

 private:
  std::string name_;
};

using AtomSet = std::set<Atom>;

AtomSet make_atoms(std::initializer_list<std::string_view> names);

/// Orders sets by cardinality, then lexicographically on their sorted elements.
bool canonical_less(const AtomSet& a, const AtomSet& b);

enum class Connective : std::uint8_t {
  atom,
  top,
  bot,
  negation,
  conjunction,
  disjunction,
  implication,
};

std::string_view connective_name(Connective c) noexcept;

class ConnectiveSet {
 public:
  constexpr ConnectiveSet() = default;
  constexpr ConnectiveSet(std::initializer_list<Connective> cs) {
    for (auto c : cs) insert(c);
  }

  constexpr bool contains(Connective c) const noexcept { return (bits_ >> bit(c)) & 1U; }
  constexpr void insert(Connective c) noexcept { bits_ |= static_cast<std::uint8_t>(1U << bit(c)); }
  constexpr bool subset_of(ConnectiveSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr ConnectiveSet united(ConnectiveSet other) const noexcept {
    ConnectiveSet r;
    r.bits_ = static_cast<std::uint8_t>(bits_ | other.bits_);
    return r;
  }
  constexpr bool empty() const noexcept { return bits_ == 0; }

  std::vector<Connective> members() const;

  friend constexpr bool operator==(ConnectiveSet, ConnectiveSet) = default;

 private:
  static constexpr unsigned bit(Connective c) noexcept { return static_cast<unsigned>(c); }
  std::uint8_t bits_ = 0;
};

/// Immutable formula tree over atoms, constants and the connectives
/// conjunction, disjunction, implication and negation. Negation is a node of
/// its own; it is never rewritten into implication-to-bottom.
class Formula {
 public:
  static Formula atom(Atom a);
  static Formula atom(std::string_view name);
  static Formula top();
  static Formula bot();
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  Connective kind() const noexcept;
  bool is(Connective c) const noexcept { return kind() == c; }

  // Preconditions: symbol() for atoms, operand() for negations, lhs()/rhs()
  // for binary nodes.
  const Atom& symbol() const;
  const Formula& operand() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Atoms and constants have depth 0.
  std::size_t depth() const noexcept;
  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  AtomSet atoms() const;
  void collect_atoms(AtomSet& out) const;
  ConnectiveSet connectives() const;
  /// Distinct subformulas in post-order (children before parents).
  std::vector<Formula> subformulas() const;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Connective kind, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

/// `body -> head`. A bare formula F is the rule `top -> F` (a fact).
class Rule {
 public:
  Rule(Formula body, Formula head) : body_(std::move(body)), head_(std::move(head)) {}
  static Rule fact(Formula head) { return Rule(Formula::top(), std::move(head)); }

  const Formula& body() const noexcept { return body_; }
  const Formula& head() const noexcept { return head_; }
  bool is_fact() const noexcept { return body_.is(Connective::top); }

  /// The rule read as a formula: the head for facts, `body -> head` otherwise.
  Formula as_formula() const;
  AtomSet atoms() const;

  friend bool operator==(const Rule&, const Rule&) = default;
  friend std::strong_ordering operator<=>(const Rule&, const Rule&) = default;

 private:
  Formula body_;
  Formula head_;
};

/// A finite set of rules over a universe of atoms. The universe always
/// contains every atom occurring in the rules.
class Program {
 public:
  Program() = default;
  explicit Program(std::vector<Rule> rules, AtomSet extra_universe = {});
  Program(std::initializer_list<Rule> rules) : Program(std::vector<Rule>(rules)) {}

  const std::set<Rule>& rules() const noexcept { return rules_; }
  const AtomSet& universe() const noexcept { return universe_; }
  AtomSet atoms() const;
  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }

  std::vector<Formula> formulas() const;
  Program united(const Program& other) const;
  Program with_universe(const AtomSet& extra) const;

  friend bool operator==(const Program&, const Program&) = default;

 private:
  std::set<Rule> rules_;
  AtomSet universe_;
};

/// A syntactic fragment. `allowed` lists the permitted connectives and
/// constants (atoms are always permitted). With `rule_form`, an implication
/// at the top of a rule is free and bodies/heads are checked against
/// `allowed`. With `normal_form`, bodies must be conjunctions of literals and
/// heads atoms. Facts (body `top`) never count against the body check.
struct FragmentDescriptor {
  ConnectiveSet allowed;
  bool rule_form = false;
  bool normal_form = false;

  static FragmentDescriptor formulas(ConnectiveSet allowed);
  static FragmentDescriptor rules(ConnectiveSet allowed);
  static FragmentDescriptor normal();
  /// Accepts e.g. `and,not`, `rules:and,or,not` or `normal`.
  static FragmentDescriptor parse(std::string_view text);

  std::string to_string() const;

  friend bool operator==(const FragmentDescriptor&, const FragmentDescriptor&) = default;
};

namespace fragments {
/// {A -> B | A, B in [and, or, not]} with top/bot admitted.
FragmentDescriptor program_rules();
/// {A -> B | A, B in [and, or, not]}.
FragmentDescriptor strict_program_rules();
/// {A -> B | A, B in [and, or, bot, top]}.
FragmentDescriptor negation_free_rules();
/// {A -> B | A, B in [and, bot, top]}.
FragmentDescriptor horn_rules();
}  // namespace fragments

bool fragment_check(const Formula& f, const FragmentDescriptor& frag);
bool fragment_check(const Rule& r, const FragmentDescriptor& frag);
bool fragment_check(const Program& p, const FragmentDescriptor& frag);

}  // namespace hteq
