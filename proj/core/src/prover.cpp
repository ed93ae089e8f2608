#include "hteq/prover.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hteq/ht.hpp"
#include "hteq/parser.hpp"

namespace hteq {

namespace {

constexpr std::size_t kc_node_budget = 200000;

using Context = std::set<Formula>;

Context without(const Context& g, const Formula& f) {
  Context out = g;
  out.erase(f);
  return out;
}

Context with(Context g, std::initializer_list<Formula> fs) {
  for (const auto& f : fs) g.insert(f);
  return g;
}

/// Premises of the named rule applied to `s` with principal formula `p`,
/// or nullopt if the rule does not apply.
std::optional<std::vector<Sequent>> rule_premises(const std::string& rule, const Sequent& s,
                                                  const std::optional<Formula>& p) {
  const Context& g = s.antecedents;
  const Formula& c = s.succedent;
  using V = std::vector<Sequent>;
  if (rule == "topR") return c.is(Connective::top) ? std::optional<V>(V{}) : std::nullopt;
  if (rule == "botL") return g.count(Formula::bot()) ? std::optional<V>(V{}) : std::nullopt;
  if (!p) return std::nullopt;
  const Formula& f = *p;

  if (rule == "id") return (f == c && g.count(f)) ? std::optional<V>(V{}) : std::nullopt;
  if (rule == "andR" && f == c && c.is(Connective::conjunction)) {
    return V{{g, c.lhs()}, {g, c.rhs()}};
  }
  if (rule == "impR" && f == c && c.is(Connective::implication)) {
    return V{{with(g, {c.lhs()}), c.rhs()}};
  }
  if ((rule == "orR1" || rule == "orR2") && f == c && c.is(Connective::disjunction)) {
    return V{{g, rule == "orR1" ? c.lhs() : c.rhs()}};
  }

  if (!g.count(f)) return std::nullopt;
  const Context rest = without(g, f);
  if (rule == "topL" && f.is(Connective::top)) return V{{rest, c}};
  if (rule == "andL" && f.is(Connective::conjunction)) return V{{with(rest, {f.lhs(), f.rhs()}), c}};
  if (rule == "orL" && f.is(Connective::disjunction)) {
    return V{{with(rest, {f.lhs()}), c}, {with(rest, {f.rhs()}), c}};
  }
  if (!f.is(Connective::implication)) return std::nullopt;
  const Formula& a = f.lhs();
  const Formula& b = f.rhs();
  if (rule == "topImpL" && a.is(Connective::top)) return V{{with(rest, {b}), c}};
  if (rule == "botImpL" && a.is(Connective::bot)) return V{{rest, c}};
  if (rule == "atomImpL" && a.is(Connective::atom) && rest.count(a)) {
    return V{{with(rest, {b}), c}};
  }
  if (rule == "andImpL" && a.is(Connective::conjunction)) {
    return V{{with(rest, {Formula::implication(a.lhs(), Formula::implication(a.rhs(), b))}), c}};
  }
  if (rule == "orImpL" && a.is(Connective::disjunction)) {
    return V{{with(rest, {Formula::implication(a.lhs(), b), Formula::implication(a.rhs(), b)}), c}};
  }
  if (rule == "impImpL" && a.is(Connective::implication)) {
    return V{{with(rest, {Formula::implication(a.rhs(), b)}), a},
             {with(rest, {b}), c}};
  }
  return std::nullopt;
}

/// Weak excluded middle for `b`, with negation read as implication to bot.
Formula wem_instance(const Formula& b) {
  const Formula nb = Formula::implication(desugar_negation(b), Formula::bot());
  return Formula::disjunction(nb, Formula::implication(nb, Formula::bot()));
}

bool is_wem_instance(const Formula& f) {
  if (!f.is(Connective::disjunction)) return false;
  const Formula& l = f.lhs();
  const Formula& r = f.rhs();
  return l.is(Connective::implication) && l.rhs().is(Connective::bot) &&
         r.is(Connective::implication) && r.rhs().is(Connective::bot) && r.lhs() == l;
}

class Search {
 public:
  explicit Search(std::size_t budget) : budget_(budget) {}

  bool exhausted() const noexcept { return exhausted_; }

  std::optional<Derivation> prove(const Sequent& s) {
    if (exhausted_) return std::nullopt;
    if (budget_ != 0 && ++nodes_ > budget_) {
      exhausted_ = true;
      return std::nullopt;
    }
    if (failed_.count(s)) return std::nullopt;
    auto d = attempt(s);
    if (!d && !exhausted_) failed_.insert(s);
    return d;
  }

 private:
  std::optional<Derivation> apply(const std::string& rule, const Sequent& s,
                                  const std::optional<Formula>& principal) {
    auto premises = rule_premises(rule, s, principal);
    if (!premises) throw std::logic_error("proof search applied an inapplicable rule");
    Derivation d{rule, s, principal, {}};
    for (const auto& p : *premises) {
      auto sub = prove(p);
      if (!sub) return std::nullopt;
      d.premises.push_back(std::move(*sub));
    }
    return d;
  }

  std::optional<Derivation> attempt(const Sequent& s) {
    const Context& g = s.antecedents;
    const Formula& c = s.succedent;
    if (g.count(c)) return Derivation{"id", s, c, {}};
    if (g.count(Formula::bot())) return Derivation{"botL", s, std::nullopt, {}};
    if (c.is(Connective::top)) return Derivation{"topR", s, std::nullopt, {}};

    // Invertible rules first: once one applies, its premises decide the sequent.
    for (const auto& f : g) {
      switch (f.kind()) {
        case Connective::top: return apply("topL", s, f);
        case Connective::conjunction: return apply("andL", s, f);
        case Connective::disjunction: return apply("orL", s, f);
        case Connective::negation:
          throw std::logic_error("proof search expects negation rewritten as implication");
        case Connective::implication: {
          const Formula& a = f.lhs();
          if (a.is(Connective::top)) return apply("topImpL", s, f);
          if (a.is(Connective::bot)) return apply("botImpL", s, f);
          if (a.is(Connective::atom) && g.count(a)) return apply("atomImpL", s, f);
          if (a.is(Connective::conjunction)) return apply("andImpL", s, f);
          if (a.is(Connective::disjunction)) return apply("orImpL", s, f);
          break;
        }
        default: break;
      }
    }
    if (c.is(Connective::conjunction)) return apply("andR", s, c);
    if (c.is(Connective::implication)) return apply("impR", s, c);
    if (c.is(Connective::negation)) {
      throw std::logic_error("proof search expects negation rewritten as implication");
    }

    if (c.is(Connective::disjunction)) {
      for (const char* rule : {"orR1", "orR2"}) {
        if (auto d = apply(rule, s, c)) return d;
        if (exhausted_) return std::nullopt;
      }
    }
    for (const auto& f : g) {
      if (f.is(Connective::implication) && f.lhs().is(Connective::implication)) {
        if (auto d = apply("impImpL", s, f)) return d;
        if (exhausted_) return std::nullopt;
      }
    }
    return std::nullopt;
  }

  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::set<Sequent> failed_;
};

Sequent make_sequent(const std::vector<Formula>& premises, const Formula& goal) {
  Sequent s{{}, desugar_negation(goal)};
  for (const auto& p : premises) s.antecedents.insert(desugar_negation(p));
  return s;
}

void check_query_size(const std::vector<Formula>& premises, const Formula& goal,
                      const Guard& guard) {
  std::size_t size = goal.size();
  for (const auto& p : premises) size += p.size();
  guard.check("prover query size", size, limits::prover_formula_size);
}

/// Intuitionistic search with weak excluded middle instances adjoined: none,
/// then one at a time, then all of them.
std::optional<Derivation> kc_instance_derivation(const std::vector<Formula>& premises,
                                                 const Formula& goal) {
  const Sequent root = make_sequent(premises, goal);
  {
    Search search(kc_node_budget);
    if (auto d = search.prove(root)) return d;
  }
  std::set<Formula> bases;
  for (const auto& f : premises) {
    for (const auto& sub : f.subformulas()) bases.insert(sub);
  }
  for (const auto& sub : goal.subformulas()) bases.insert(sub);
  std::vector<Formula> instances;
  for (const auto& b : bases) {
    if (!b.is(Connective::top) && !b.is(Connective::bot)) instances.push_back(wem_instance(b));
  }

  auto attempt = [&](const std::vector<Formula>& extra) -> std::optional<Derivation> {
    Sequent extended = root;
    for (const auto& e : extra) extended.antecedents.insert(e);
    Search search(kc_node_budget);
    auto d = search.prove(extended);
    if (!d) return std::nullopt;
    return Derivation{"wem", root, std::nullopt, {std::move(*d)}};
  };
  for (const auto& inst : instances) {
    if (auto d = attempt({inst})) return d;
  }
  if (instances.size() > 1) return attempt(instances);
  return std::nullopt;
}

bool plain_fragment(const Formula& f) {
  return f.connectives().subset_of(ConnectiveSet{Connective::atom, Connective::top,
                                                 Connective::bot, Connective::negation,
                                                 Connective::conjunction,
                                                 Connective::disjunction});
}

}  // namespace

std::strong_ordering operator<=>(const Sequent& a, const Sequent& b) {
  auto c = std::lexicographical_compare_three_way(a.antecedents.begin(), a.antecedents.end(),
                                                  b.antecedents.begin(), b.antecedents.end());
  if (c != 0) return c;
  return a.succedent <=> b.succedent;
}

std::string render(const Sequent& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& f : s.antecedents) {
    out << (first ? "" : ", ") << render(f);
    first = false;
  }
  out << (first ? "|- " : " |- ") << render(s.succedent);
  return out.str();
}

std::size_t Derivation::node_count() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.node_count();
  return n;
}

bool replay(const Derivation& d) {
  if (d.rule == "g3") return d.premises.empty() && g3_entails(std::vector<Formula>(d.sequent.antecedents.begin(), d.sequent.antecedents.end()), d.sequent.succedent);
  if (d.rule == "wem") {
    if (d.premises.size() != 1) return false;
    const Sequent& child = d.premises[0].sequent;
    if (child.succedent != desugar_negation(d.sequent.succedent)) return false;
    for (const auto& f : d.sequent.antecedents) {
      if (!child.antecedents.count(desugar_negation(f))) return false;
    }
    for (const auto& f : child.antecedents) {
      const bool original = std::any_of(d.sequent.antecedents.begin(), d.sequent.antecedents.end(),
                                        [&](const Formula& o) { return desugar_negation(o) == f; });
      if (!original && !is_wem_instance(f)) return false;
    }
    return replay(d.premises[0]);
  }
  const auto expected = rule_premises(d.rule, d.sequent, d.principal);
  if (!expected || expected->size() != d.premises.size()) return false;
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    if (d.premises[i].sequent != (*expected)[i] || !replay(d.premises[i])) return false;
  }
  return true;
}

Formula desugar_negation(const Formula& f) {
  switch (f.kind()) {
    case Connective::atom:
    case Connective::top:
    case Connective::bot: return f;
    case Connective::negation:
      return Formula::implication(desugar_negation(f.operand()), Formula::bot());
    case Connective::conjunction:
      return Formula::conjunction(desugar_negation(f.lhs()), desugar_negation(f.rhs()));
    case Connective::disjunction:
      return Formula::disjunction(desugar_negation(f.lhs()), desugar_negation(f.rhs()));
    case Connective::implication:
      return Formula::implication(desugar_negation(f.lhs()), desugar_negation(f.rhs()));
  }
  throw std::logic_error("desugar_negation: unknown connective");
}

SearchOutcome ipl_search(const std::vector<Formula>& premises, const Formula& goal,
                         std::size_t node_budget) {
  Search search(node_budget);
  SearchOutcome out;
  out.derivation = search.prove(make_sequent(premises, goal));
  out.exhausted = search.exhausted();
  return out;
}

std::string_view kind_name(Verdict::Kind k) noexcept {
  switch (k) {
    case Verdict::Kind::provable: return "provable";
    case Verdict::Kind::refuted: return "refuted";
    case Verdict::Kind::unknown: return "unknown";
  }
  return "unknown";
}

Verdict ipl_decide(const std::vector<Formula>& premises, const Formula& goal,
                   std::size_t witness_bound, const Guard& guard) {
  check_query_size(premises, goal, guard);
  Verdict v;
  auto outcome = ipl_search(premises, goal);
  if (outcome.derivation) {
    v.kind = Verdict::Kind::provable;
    v.derivation = std::move(outcome.derivation);
    return v;
  }
  v.kind = Verdict::Kind::refuted;
  try {
    v.countermodel = countermodel_search(premises, goal, FrameClass::any, witness_bound, guard);
  } catch (const GuardExceeded& e) {
    v.note = std::string("not provable; no countermodel searched: ") + e.what();
    return v;
  }
  if (!v.countermodel) {
    v.note = "not provable; no countermodel with at most " + std::to_string(witness_bound) +
             " worlds";
  }
  return v;
}

bool in_kc_fragment(const Formula& f) {
  if (f.is(Connective::implication)) return plain_fragment(f.lhs()) && plain_fragment(f.rhs());
  return plain_fragment(f);
}

Verdict kc_decide(const std::vector<Formula>& premises, const Formula& goal,
                  std::size_t model_bound, const Guard& guard) {
  check_query_size(premises, goal, guard);
  Verdict v;
  const bool exact = in_kc_fragment(goal) &&
                     std::all_of(premises.begin(), premises.end(), in_kc_fragment);
  if (exact) {
    if (auto cm = g3_countermodel(premises, goal, guard)) {
      v.kind = Verdict::Kind::refuted;
      v.countermodel = Countermodel{cm->as_kripke(), 0};
      v.note = "exact: KC and G3 agree on this fragment";
      return v;
    }
    v.kind = Verdict::Kind::provable;
    v.derivation = kc_instance_derivation(premises, goal);
    if (!v.derivation) {
      v.derivation = Derivation{"g3", make_sequent(premises, goal), std::nullopt, {}};
    }
    v.note = "exact: KC and G3 agree on this fragment";
    return v;
  }
  if (auto d = kc_instance_derivation(premises, goal)) {
    v.kind = Verdict::Kind::provable;
    v.derivation = std::move(d);
    return v;
  }
  if (auto cm = countermodel_search(premises, goal, FrameClass::single_top, model_bound, guard)) {
    v.kind = Verdict::Kind::refuted;
    v.countermodel = std::move(cm);
    return v;
  }
  v.kind = Verdict::Kind::unknown;
  v.note = "no derivation with weak excluded middle instances and no single-top countermodel "
           "with at most " + std::to_string(model_bound) + " worlds";
  return v;
}

Verdict g3_decide(const std::vector<Formula>& premises, const Formula& goal, const Guard& guard) {
  Verdict v;
  if (auto cm = g3_countermodel(premises, goal, guard)) {
    v.kind = Verdict::Kind::refuted;
    v.countermodel = Countermodel{cm->as_kripke(), 0};
    return v;
  }
  v.kind = Verdict::Kind::provable;
  v.derivation = Derivation{"g3", make_sequent(premises, goal), std::nullopt, {}};
  return v;
}

bool check_normkc_instance() {
  const Formula p = Formula::atom("p");
  const Formula not_p = Formula::negation(p);
  const Formula a = p;
  const Formula b = Formula::disjunction(not_p, Formula::negation(not_p));
  const Formula c = not_p;
  const Formula d = Formula::bot();

  const std::vector<Formula> antecedents{
      Formula::implication(Formula::conjunction(a, c), d),
      Formula::implication(Formula::negation(a), b),
      Formula::implication(Formula::negation(c), b),
  };
  const Formula not_d = Formula::negation(d);
  const Formula axiom = Formula::implication(
      Formula::conjunction(Formula::conjunction(antecedents[0], antecedents[1]), antecedents[2]),
      Formula::implication(not_d, b));

  for (const auto& f : antecedents) {
    if (!ipl_decide({}, f).provable()) return false;
  }
  if (!ipl_decide({}, not_d).provable()) return false;
  std::vector<Formula> context = antecedents;
  context.push_back(not_d);
  context.push_back(axiom);
  if (!ipl_decide(context, b).provable()) return false;
  return ipl_decide({}, b).refuted();
}

}  // namespace hteq
