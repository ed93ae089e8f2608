#include "hteq/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>


namespace hteq {

namespace {

bool is_reserved(std::string_view name) {
  return name == "top" || name == "bot" || name == "not";
}

}  // namespace

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) {
    throw std::invalid_argument("invalid atom name '" + name_ + "'");
  }
}

bool Atom::is_valid_name(std::string_view name) noexcept {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '_')) return false;
  }
  return !is_reserved(name);
}

AtomSet make_atoms(std::initializer_list<std::string_view> names) {
  AtomSet out;
  for (auto n : names) out.emplace(std::string(n));
  return out;
}

bool canonical_less(const AtomSet& a, const AtomSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string_view connective_name(Connective c) noexcept {
  switch (c) {
    case Connective::atom: return "atom";
    case Connective::top: return "top";
    case Connective::bot: return "bot";
    case Connective::negation: return "not";
    case Connective::conjunction: return "and";
    case Connective::disjunction: return "or";
    case Connective::implication: return "imp";
  }
  return "?";
}

std::vector<Connective> ConnectiveSet::members() const {
  std::vector<Connective> out;
  for (auto c : {Connective::atom, Connective::top, Connective::bot, Connective::negation,
                 Connective::conjunction, Connective::disjunction, Connective::implication}) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  Connective kind;
  std::optional<Atom> symbol;
  std::vector<Formula> children;
  std::size_t depth = 0;
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Connective kind, std::vector<Formula> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  std::size_t h = static_cast<std::size_t>(kind) * 0x100000001b3ULL;
  for (const auto& c : children) {
    node->depth = std::max(node->depth, c.depth() + 1);
    node->size += c.size();
    h = mix(h, c.hash());
  }
  node->hash = h;
  node->children = std::move(children);
  return Formula(std::move(node));
}

Formula Formula::atom(Atom a) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::atom;
  node->hash = mix(0x51ed27, std::hash<std::string>{}(a.name()));
  node->symbol = std::move(a);
  return Formula(std::move(node));
}

Formula Formula::atom(std::string_view name) { return atom(Atom(std::string(name))); }

Formula Formula::top() {
  static const Formula t = make(Connective::top, {});
  return t;
}

Formula Formula::bot() {
  static const Formula b = make(Connective::bot, {});
  return b;
}

Formula Formula::negation(Formula operand) { return make(Connective::negation, {std::move(operand)}); }

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Connective::conjunction, {std::move(lhs), std::move(rhs)});
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Connective::disjunction, {std::move(lhs), std::move(rhs)});
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Connective::implication, {std::move(lhs), std::move(rhs)});
}

Connective Formula::kind() const noexcept { return node_->kind; }

const Atom& Formula::symbol() const {
  if (!node_->symbol) throw std::logic_error("symbol() on a non-atomic formula");
  return *node_->symbol;
}

const Formula& Formula::operand() const {
  if (node_->kind != Connective::negation) throw std::logic_error("operand() on a non-negation");
  return node_->children[0];
}

const Formula& Formula::lhs() const {
  if (node_->children.size() != 2) throw std::logic_error("lhs() on a non-binary formula");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (node_->children.size() != 2) throw std::logic_error("rhs() on a non-binary formula");
  return node_->children[1];
}

std::size_t Formula::depth() const noexcept { return node_->depth; }
std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

AtomSet Formula::atoms() const {
  AtomSet out;
  collect_atoms(out);
  return out;
}

void Formula::collect_atoms(AtomSet& out) const {
  if (node_->symbol) {
    out.insert(*node_->symbol);
    return;
  }
  for (const auto& c : node_->children) c.collect_atoms(out);
}

ConnectiveSet Formula::connectives() const {
  ConnectiveSet out;
  out.insert(node_->kind);
  for (const auto& c : node_->children) out = out.united(c.connectives());
  return out;
}

std::vector<Formula> Formula::subformulas() const {
  std::vector<Formula> out;
  std::set<Formula> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    for (const auto& c : f.node_->children) walk(c);
    if (seen.insert(f).second) out.push_back(f);
  };
  walk(*this);
  return out;
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.node_->symbol) return *a.node_->symbol <=> *b.node_->symbol;
  const auto& ac = a.node_->children;
  const auto& bc = b.node_->children;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (auto c = ac[i] <=> bc[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Rule / Program

Formula Rule::as_formula() const {
  if (is_fact()) return head_;
  return Formula::implication(body_, head_);
}

AtomSet Rule::atoms() const {
  AtomSet out;
  body_.collect_atoms(out);
  head_.collect_atoms(out);
  return out;
}

Program::Program(std::vector<Rule> rules, AtomSet extra_universe)
    : rules_(std::make_move_iterator(rules.begin()), std::make_move_iterator(rules.end())),
      universe_(std::move(extra_universe)) {
  for (const auto& r : rules_) {
    r.body().collect_atoms(universe_);
    r.head().collect_atoms(universe_);
  }
}

AtomSet Program::atoms() const {
  AtomSet out;
  for (const auto& r : rules_) {
    r.body().collect_atoms(out);
    r.head().collect_atoms(out);
  }
  return out;
}

std::vector<Formula> Program::formulas() const {
  std::vector<Formula> out;
  out.reserve(rules_.size());
  for (const auto& r : rules_) out.push_back(r.as_formula());
  return out;
}

Program Program::united(const Program& other) const {
  std::vector<Rule> all(rules_.begin(), rules_.end());
  all.insert(all.end(), other.rules_.begin(), other.rules_.end());
  AtomSet u = universe_;
  u.insert(other.universe_.begin(), other.universe_.end());
  return Program(std::move(all), std::move(u));
}

Program Program::with_universe(const AtomSet& extra) const {
  Program p = *this;
  p.universe_.insert(extra.begin(), extra.end());
  return p;
}

// ---------------------------------------------------------------------------
// Fragments

FragmentDescriptor FragmentDescriptor::formulas(ConnectiveSet allowed) {
  return FragmentDescriptor{allowed, false, false};
}

FragmentDescriptor FragmentDescriptor::rules(ConnectiveSet allowed) {
  return FragmentDescriptor{allowed, true, false};
}

FragmentDescriptor FragmentDescriptor::normal() {
  return FragmentDescriptor{{Connective::conjunction, Connective::negation}, true, true};
}

FragmentDescriptor FragmentDescriptor::parse(std::string_view text) {
  FragmentDescriptor out;
  if (text == "normal") return normal();
  constexpr std::string_view rules_prefix = "rules:";
  if (text.substr(0, rules_prefix.size()) == rules_prefix) {
    out.rule_form = true;
    text.remove_prefix(rules_prefix.size());
  }
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    if (item == "and" || item == "&") {
      out.allowed.insert(Connective::conjunction);
    } else if (item == "or" || item == "|") {
      out.allowed.insert(Connective::disjunction);
    } else if (item == "imp" || item == "->") {
      out.allowed.insert(Connective::implication);
    } else if (item == "not") {
      out.allowed.insert(Connective::negation);
    } else if (item == "top") {
      out.allowed.insert(Connective::top);
    } else if (item == "bot") {
      out.allowed.insert(Connective::bot);
    } else {
      throw std::invalid_argument("unknown connective '" + std::string(item) + "' in fragment");
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string FragmentDescriptor::to_string() const {
  if (*this == normal()) return "normal";
  std::ostringstream out;
  if (rule_form) out << "rules:";
  bool first = true;
  for (auto c : {Connective::conjunction, Connective::disjunction, Connective::implication,
                 Connective::negation, Connective::top, Connective::bot}) {
    if (!allowed.contains(c)) continue;
    if (!first) out << ',';
    out << connective_name(c);
    first = false;
  }
  if (normal_form) out << (first ? "normal" : ",normal");
  return out.str();
}

namespace fragments {

FragmentDescriptor program_rules() {
  return FragmentDescriptor::rules({Connective::conjunction, Connective::disjunction,
                                    Connective::negation, Connective::top, Connective::bot});
}

FragmentDescriptor strict_program_rules() {
  return FragmentDescriptor::rules(
      {Connective::conjunction, Connective::disjunction, Connective::negation});
}

FragmentDescriptor negation_free_rules() {
  return FragmentDescriptor::rules(
      {Connective::conjunction, Connective::disjunction, Connective::top, Connective::bot});
}

FragmentDescriptor horn_rules() {
  return FragmentDescriptor::rules({Connective::conjunction, Connective::top, Connective::bot});
}

}  // namespace fragments

namespace {

bool uses_only(const Formula& f, ConnectiveSet allowed) {
  if (!f.is(Connective::atom) && !allowed.contains(f.kind())) return false;
  switch (f.kind()) {
    case Connective::negation: return uses_only(f.operand(), allowed);
    case Connective::conjunction:
    case Connective::disjunction:
    case Connective::implication: return uses_only(f.lhs(), allowed) && uses_only(f.rhs(), allowed);
    default: return true;
  }
}

bool is_literal(const Formula& f) {
  return f.is(Connective::atom) || (f.is(Connective::negation) && f.operand().is(Connective::atom));
}

bool is_literal_conjunction(const Formula& f) {
  if (f.is(Connective::conjunction)) {
    return is_literal_conjunction(f.lhs()) && is_literal_conjunction(f.rhs());
  }
  return is_literal(f);
}

bool check_body_head(const Formula& body, const Formula& head, const FragmentDescriptor& frag,
                     bool fact) {
  if (frag.normal_form) {
    if (!head.is(Connective::atom)) return false;
    if (!fact && !is_literal_conjunction(body)) return false;
  }
  if (frag.rule_form) {
    return (fact || uses_only(body, frag.allowed)) && uses_only(head, frag.allowed);
  }
  if (fact) return uses_only(head, frag.allowed);
  return frag.allowed.contains(Connective::implication) && uses_only(body, frag.allowed) &&
         uses_only(head, frag.allowed);
}

}  // namespace

bool fragment_check(const Formula& f, const FragmentDescriptor& frag) {
  if (f.is(Connective::implication)) return check_body_head(f.lhs(), f.rhs(), frag, false);
  return check_body_head(Formula::top(), f, frag, true);
}

bool fragment_check(const Rule& r, const FragmentDescriptor& frag) {
  return check_body_head(r.body(), r.head(), frag, r.is_fact());
}

bool fragment_check(const Program& p, const FragmentDescriptor& frag) {
  return std::all_of(p.rules().begin(), p.rules().end(),
                     [&](const Rule& r) { return fragment_check(r, frag); });
}

}  // namespace hteq
