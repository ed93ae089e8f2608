#pragma once

// Reference semantics written straight from the definitions, by recursion on
// the formula tree. Nothing here uses the library's compiled evaluator,
// bitmask universes or frame enumeration, so agreement is meaningful.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <hteq/syntax.hpp>

namespace naive {

using hteq::Atom;
using hteq::AtomSet;
using hteq::Connective;
using hteq::Formula;
using hteq::Program;
using hteq::Rule;

inline bool holds(const AtomSet& world, const Formula& f) {
  switch (f.kind()) {
    case Connective::atom: return world.count(f.symbol()) > 0;
    case Connective::top: return true;
    case Connective::bot: return false;
    case Connective::negation: return !holds(world, f.operand());
    case Connective::conjunction: return holds(world, f.lhs()) && holds(world, f.rhs());
    case Connective::disjunction: return holds(world, f.lhs()) || holds(world, f.rhs());
    case Connective::implication: return !holds(world, f.lhs()) || holds(world, f.rhs());
  }
  return false;
}

inline bool holds(const AtomSet& world, const Program& p) {
  return std::all_of(p.rules().begin(), p.rules().end(), [&](const Rule& r) {
    return !holds(world, r.body()) || holds(world, r.head());
  });
}

inline std::vector<AtomSet> subsets(const AtomSet& universe) {
  std::vector<Atom> atoms(universe.begin(), universe.end());
  std::vector<AtomSet> out;
  for (std::size_t m = 0; m < (std::size_t{1} << atoms.size()); ++m) {
    AtomSet s;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (m >> i & 1) s.insert(atoms[i]);
    }
    out.push_back(s);
  }
  return out;
}

inline bool subset_of(const AtomSet& a, const AtomSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// Kripke models as an explicit reflexive-transitive relation.

struct Model {
  std::vector<std::vector<bool>> leq;  // leq[a][b]: a <= b
  std::vector<AtomSet> label;
  std::size_t size() const { return label.size(); }
};

inline bool forces(const Model& m, std::size_t w, const Formula& f) {
  switch (f.kind()) {
    case Connective::atom: return m.label[w].count(f.symbol()) > 0;
    case Connective::top: return true;
    case Connective::bot: return false;
    case Connective::conjunction: return forces(m, w, f.lhs()) && forces(m, w, f.rhs());
    case Connective::disjunction: return forces(m, w, f.lhs()) || forces(m, w, f.rhs());
    case Connective::negation:
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m.leq[w][v] && forces(m, v, f.operand())) return false;
      }
      return true;
    case Connective::implication:
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m.leq[w][v] && forces(m, v, f.lhs()) && !forces(m, v, f.rhs())) return false;
      }
      return true;
  }
  return false;
}

inline bool is_partial_order(const std::vector<std::vector<bool>>& r) {
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!r[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && r[a][b] && r[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c) {
        if (r[a][b] && r[b][c] && !r[a][c]) return false;
      }
    }
  }
  return true;
}

inline std::size_t terminal_count(const std::vector<std::vector<bool>>& r) {
  std::size_t tops = 0;
  for (std::size_t a = 0; a < r.size(); ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < r.size(); ++b) maximal = maximal && (a == b || !r[a][b]);
    tops += maximal;
  }
  return tops;
}

/// Every partial order on n worlds with world 0 below all others. Labelled
/// orders, no isomorphism reduction.
inline std::vector<std::vector<std::vector<bool>>> rooted_orders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = 1; b < n; ++b) {
      if (a != b) pairs.emplace_back(a, b);
    }
  }
  std::vector<std::vector<std::vector<bool>>> out;
  for (std::size_t m = 0; m < (std::size_t{1} << pairs.size()); ++m) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) r[a][a] = r[0][a] = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (m >> i & 1) r[pairs[i].first][pairs[i].second] = true;
    }
    if (is_partial_order(r)) out.push_back(r);
  }
  return out;
}

/// Number of rooted orders on n worlds up to isomorphism, by comparing every
/// pair under every permutation.
inline std::size_t rooted_order_classes(std::size_t n, bool single_top) {
  std::vector<std::vector<std::vector<bool>>> reps;
  std::vector<std::size_t> perm(n);
  for (const auto& r : rooted_orders(n)) {
    if (single_top && terminal_count(r) != 1) continue;
    bool seen = false;
    for (const auto& s : reps) {
      for (std::size_t i = 0; i < n; ++i) perm[i] = i;
      do {
        bool same = true;
        for (std::size_t a = 0; a < n && same; ++a) {
          for (std::size_t b = 0; b < n && same; ++b) same = r[a][b] == s[perm[a]][perm[b]];
        }
        seen = same;
      } while (!seen && std::next_permutation(perm.begin(), perm.end()));
      if (seen) break;
    }
    if (!seen) reps.push_back(r);
  }
  return reps.size();
}

/// Visits every monotone labelling over `atoms` of every rooted order with
/// 1..max_worlds worlds.
inline bool for_each_model(std::size_t max_worlds, const AtomSet& atoms, bool single_top,
                           const std::function<bool(const Model&)>& visit) {
  const auto sets = subsets(atoms);
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    for (const auto& r : rooted_orders(n)) {
      if (single_top && terminal_count(r) != 1) continue;
      std::vector<std::size_t> digit(n, 0);
      while (true) {
        Model m{r, {}};
        for (std::size_t w = 0; w < n; ++w) m.label.push_back(sets[digit[w]]);
        bool monotone = true;
        for (std::size_t a = 0; a < n && monotone; ++a) {
          for (std::size_t b = 0; b < n && monotone; ++b) {
            if (r[a][b]) monotone = subset_of(m.label[a], m.label[b]);
          }
        }
        if (monotone && !visit(m)) return false;
        std::size_t i = 0;
        while (i < n && ++digit[i] == sets.size()) digit[i++] = 0;
        if (i == n) break;
      }
    }
  }
  return true;
}

/// A rooted model with at most `max_worlds` worlds whose root forces every
/// premise and not the goal.
inline bool has_countermodel(const std::vector<Formula>& premises, const Formula& goal,
                             std::size_t max_worlds, bool single_top) {
  AtomSet atoms = goal.atoms();
  for (const auto& p : premises) p.collect_atoms(atoms);
  bool found = false;
  for_each_model(max_worlds, atoms, single_top, [&](const Model& m) {
    found = !forces(m, 0, goal) && std::all_of(premises.begin(), premises.end(),
                                                [&](const Formula& p) { return forces(m, 0, p); });
    return !found;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Here-and-there and the three-valued Goedel matrix.

/// <Y, X> at h (here = true) or t.
inline bool ht_forces(const AtomSet& y, const AtomSet& x, bool here, const Formula& f) {
  if (!here) return holds(x, f);
  switch (f.kind()) {
    case Connective::atom: return y.count(f.symbol()) > 0;
    case Connective::top: return true;
    case Connective::bot: return false;
    case Connective::conjunction: return ht_forces(y, x, true, f.lhs()) && ht_forces(y, x, true, f.rhs());
    case Connective::disjunction: return ht_forces(y, x, true, f.lhs()) || ht_forces(y, x, true, f.rhs());
    case Connective::negation: return !ht_forces(y, x, true, f.operand()) && !holds(x, f.operand());
    case Connective::implication:
      return (!ht_forces(y, x, true, f.lhs()) || ht_forces(y, x, true, f.rhs())) &&
             (!holds(x, f.lhs()) || holds(x, f.rhs()));
  }
  return false;
}

inline bool ht_model(const AtomSet& y, const AtomSet& x, const Program& p) {
  return std::all_of(p.rules().begin(), p.rules().end(), [&](const Rule& r) {
    return ht_forces(y, x, true, Formula::implication(r.body(), r.head()));
  });
}

/// All <Y, X> over `universe` satisfying p, as (here, there) pairs.
inline std::set<std::pair<AtomSet, AtomSet>> ht_models(const Program& p, const AtomSet& universe) {
  std::set<std::pair<AtomSet, AtomSet>> out;
  for (const auto& x : subsets(universe)) {
    for (const auto& y : subsets(x)) {
      if (ht_model(y, x, p)) out.emplace(y, x);
    }
  }
  return out;
}

/// Values 0, 1, 2 for false, undetermined, true.
inline int goedel(const std::function<int(const Atom&)>& v, const Formula& f) {
  switch (f.kind()) {
    case Connective::atom: return v(f.symbol());
    case Connective::top: return 2;
    case Connective::bot: return 0;
    case Connective::negation: return goedel(v, f.operand()) == 0 ? 2 : 0;
    case Connective::conjunction: return std::min(goedel(v, f.lhs()), goedel(v, f.rhs()));
    case Connective::disjunction: return std::max(goedel(v, f.lhs()), goedel(v, f.rhs()));
    case Connective::implication: {
      const int a = goedel(v, f.lhs());
      const int b = goedel(v, f.rhs());
      return a <= b ? 2 : b;
    }
  }
  return 0;
}

/// Takes value 2 under every three-valued assignment to its atoms.
inline bool goedel_valid(const Formula& f) {
  const AtomSet atoms = f.atoms();
  const std::vector<Atom> list(atoms.begin(), atoms.end());
  std::size_t total = 1;
  for (std::size_t i = 0; i < list.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    auto v = [&](const Atom& a) {
      std::size_t c = code;
      for (std::size_t i = 0; i < list.size(); ++i, c /= 3) {
        if (list[i] == a) return static_cast<int>(c % 3);
      }
      return 0;
    };
    if (goedel(v, f) != 2) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Answer sets.

/// Replace each `not A` by bot when x satisfies A, by top otherwise.
inline Formula reduct(const Formula& f, const AtomSet& x) {
  switch (f.kind()) {
    case Connective::negation: return holds(x, f.operand()) ? Formula::bot() : Formula::top();
    case Connective::conjunction: return Formula::conjunction(naive::reduct(f.lhs(), x), naive::reduct(f.rhs(), x));
    case Connective::disjunction: return Formula::disjunction(naive::reduct(f.lhs(), x), naive::reduct(f.rhs(), x));
    case Connective::implication: return Formula::implication(naive::reduct(f.lhs(), x), naive::reduct(f.rhs(), x));
    default: return f;
  }
}

inline Program reduct(const Program& p, const AtomSet& x) {
  std::vector<Rule> rules;
  for (const auto& r : p.rules()) rules.emplace_back(naive::reduct(r.body(), x), naive::reduct(r.head(), x));
  return Program(std::move(rules));
}

/// X such that X satisfies the reduct by X and no proper subset does.
inline std::set<AtomSet> answer_sets(const Program& p, const AtomSet& universe) {
  std::set<AtomSet> out;
  for (const auto& x : subsets(universe)) {
    const Program r = naive::reduct(p, x);
    if (!holds(x, r)) continue;
    bool minimal = true;
    for (const auto& y : subsets(x)) {
      if (y != x && holds(y, r)) minimal = false;
    }
    if (minimal) out.insert(x);
  }
  return out;
}

/// Same answer sets for p1 + E and p2 + E for every E drawn from the given
/// extension rules.
inline bool same_under_extensions(const Program& p1, const Program& p2, const AtomSet& universe,
                                  const std::vector<Rule>& extension_rules) {
  for (std::size_t m = 0; m < (std::size_t{1} << extension_rules.size()); ++m) {
    std::vector<Rule> e;
    for (std::size_t i = 0; i < extension_rules.size(); ++i) {
      if (m >> i & 1) e.push_back(extension_rules[i]);
    }
    const Program ext(e);
    if (answer_sets(p1.united(ext), universe) != answer_sets(p2.united(ext), universe)) return false;
  }
  return true;
}

}  // namespace naive
