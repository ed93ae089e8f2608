#include "hteq/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "hteq/evaluation.hpp"
#include "hteq/stable.hpp"

namespace hteq {

namespace {

AtomSet joint_atoms(const Program& p1, const Program& p2) {
  AtomSet u = p1.atoms();
  const AtomSet a2 = p2.atoms();
  u.insert(a2.begin(), a2.end());
  return u;
}

void require_fragment(const Program& p1, const Program& p2, const FragmentDescriptor& frag,
                      const char* operation) {
  if (!fragment_check(p1, frag) || !fragment_check(p2, frag)) {
    throw FragmentError(std::string(operation) + " requires programs in " + frag.to_string());
  }
}

// ---------------------------------------------------------------------------
// Extension oracle
//
// Sets of atoms are masks over the universe; sets of such masks are bitsets
// indexed by the mask (at most 16 subsets, so they fit in 32 bits).

using SubsetBits = std::uint32_t;

struct OracleTables {
  std::vector<SubsetBits> reduct_models_1;  ///< per X: the Y within X with <Y> |= P1^X
  std::vector<SubsetBits> reduct_models_2;
  std::vector<SubsetBits> below;            ///< per X: every Y within X
  std::vector<SubsetBits> rule_models;      ///< per unary rule: its classical models
};

std::vector<SubsetBits> reduct_model_table(const Program& p, const Universe& u) {
  const std::size_t count = std::size_t{1} << u.size();
  std::vector<SubsetBits> out(count, 0);
  for (AtomMask x = 0; x < count; ++x) {
    const auto rules = compile_program(reduct(p, u.set_of(x)).rules, u);
    for_each_submask(x, [&](AtomMask y) {
      if (all_true(rules, ClassicalDomain{y})) out[x] |= SubsetBits{1} << y;
    });
  }
  return out;
}

// Answer sets of P + E where E is negation-free, so (P + E)^X = P^X + E.
SubsetBits answer_set_bits(const std::vector<SubsetBits>& reduct_models,
                           const std::vector<SubsetBits>& below, SubsetBits extension_models) {
  SubsetBits out = 0;
  for (std::size_t x = 0; x < reduct_models.size(); ++x) {
    if ((reduct_models[x] & extension_models & below[x]) == (SubsetBits{1} << x)) {
      out |= SubsetBits{1} << x;
    }
  }
  return out;
}

struct ExtensionKey {
  int size;
  std::uint64_t mask;
  bool operator<(const ExtensionKey& o) const {
    return size != o.size ? size < o.size : mask < o.mask;
  }
};

std::optional<ExtensionKey> scan_extensions(const OracleTables& t, std::uint64_t first,
                                            std::uint64_t last, SubsetBits all_subsets) {
  std::optional<ExtensionKey> best;
  for (std::uint64_t e = first; e < last; ++e) {
    const int size = std::popcount(e);
    if (best && size >= best->size) continue;
    SubsetBits models = all_subsets;
    for (std::uint64_t rest = e; rest != 0; rest &= rest - 1) {
      models &= t.rule_models[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    if (answer_set_bits(t.reduct_models_1, t.below, models) !=
        answer_set_bits(t.reduct_models_2, t.below, models)) {
      const ExtensionKey key{size, e};
      if (!best || key < *best) best = key;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Expressibility search

constexpr std::size_t max_ht_models = 81;  // 3^4
using ModelSet = std::bitset<max_ht_models>;

struct HtTruth {
  ModelSet here;
  ModelSet there;
  bool operator==(const HtTruth&) const = default;
};

struct HtTruthHash {
  std::size_t operator()(const HtTruth& v) const {
    const std::hash<ModelSet> h;
    return h(v.here) * 31 + h(v.there);
  }
};

struct Candidate {
  Formula formula;
  HtTruth truth;
};

class HtAlgebra {
 public:
  explicit HtAlgebra(std::size_t atoms) {
    for (AtomMask x : canonical_masks(atoms)) {
      for (AtomMask y : canonical_masks(atoms)) {
        if ((y & ~x) == 0) models_.push_back({y, x});
      }
    }
    for (std::size_t k = 0; k < models_.size(); ++k) all_.set(k);
  }

  std::size_t model_count() const { return models_.size(); }
  const ModelSet& all() const { return all_; }

  HtTruth atom(std::size_t i) const {
    HtTruth v;
    for (std::size_t k = 0; k < models_.size(); ++k) {
      v.here[k] = (models_[k].here >> i) & 1U;
      v.there[k] = (models_[k].there >> i) & 1U;
    }
    return v;
  }
  HtTruth top() const { return {all_, all_}; }
  HtTruth bot() const { return {}; }
  HtTruth negate(const HtTruth& a) const {
    const ModelSet t = all_ & ~a.there;
    return {t, t};
  }
  HtTruth conj(const HtTruth& a, const HtTruth& b) const { return {a.here & b.here, a.there & b.there}; }
  HtTruth disj(const HtTruth& a, const HtTruth& b) const { return {a.here | b.here, a.there | b.there}; }
  HtTruth implies(const HtTruth& a, const HtTruth& b) const {
    const ModelSet there = all_ & (~a.there | b.there);
    return {there & (~a.here | b.here), there};
  }

  ModelSet program_models(const Program& p, const Universe& u) const {
    const auto rules = compile_program(p, u);
    ModelSet out;
    for (std::size_t k = 0; k < models_.size(); ++k) {
      out[k] = all_forced_here(rules, HtDomain{models_[k].here, models_[k].there});
    }
    return out;
  }

 private:
  struct Pair {
    AtomMask here;
    AtomMask there;
  };
  std::vector<Pair> models_;
  ModelSet all_;
};

/// Formulas over the allowed connectives up to `max_depth`, one per HT truth
/// function, smallest depth first.
std::vector<Candidate> formula_classes(const HtAlgebra& alg, const Universe& u,
                                       ConnectiveSet allowed, std::size_t max_depth) {
  std::vector<Candidate> reps;
  std::unordered_map<HtTruth, std::size_t, HtTruthHash> seen;
  auto offer = [&](Formula f, HtTruth v) {
    if (seen.emplace(v, reps.size()).second) reps.push_back({std::move(f), v});
  };
  for (std::size_t i = 0; i < u.size(); ++i) offer(Formula::atom(u.atoms()[i]), alg.atom(i));
  if (allowed.contains(Connective::top)) offer(Formula::top(), alg.top());
  if (allowed.contains(Connective::bot)) offer(Formula::bot(), alg.bot());

  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    const std::size_t n = reps.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (allowed.contains(Connective::negation)) {
        offer(Formula::negation(reps[i].formula), alg.negate(reps[i].truth));
      }
      for (std::size_t j = 0; j < n; ++j) {
        const auto& a = reps[i];
        const auto& b = reps[j];
        if (i <= j && allowed.contains(Connective::conjunction)) {
          offer(Formula::conjunction(a.formula, b.formula), alg.conj(a.truth, b.truth));
        }
        if (i <= j && allowed.contains(Connective::disjunction)) {
          offer(Formula::disjunction(a.formula, b.formula), alg.disj(a.truth, b.truth));
        }
        if (allowed.contains(Connective::implication)) {
          offer(Formula::implication(a.formula, b.formula), alg.implies(a.truth, b.truth));
        }
      }
    }
  }
  return reps;
}

struct RuleCandidate {
  Rule rule;
  ModelSet models;
};

std::vector<RuleCandidate> normal_rules(const HtAlgebra& alg, const Universe& u,
                                        std::size_t max_depth) {
  std::vector<RuleCandidate> out;
  const std::size_t n = u.size();
  std::size_t bodies = 1;
  for (std::size_t i = 0; i < n; ++i) bodies *= 3;
  for (std::size_t code = 0; code < bodies; ++code) {
    std::optional<Formula> body;
    HtTruth body_truth = alg.top();
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) {
      if (c % 3 == 0) continue;
      Formula lit = Formula::atom(u.atoms()[i]);
      HtTruth lit_truth = alg.atom(i);
      if (c % 3 == 2) {
        lit = Formula::negation(lit);
        lit_truth = alg.negate(lit_truth);
      }
      body = body ? Formula::conjunction(*body, lit) : lit;
      body_truth = alg.conj(body_truth, lit_truth);
    }
    if (body && body->depth() > max_depth) continue;
    for (std::size_t h = 0; h < n; ++h) {
      const Formula head = Formula::atom(u.atoms()[h]);
      Rule r = body ? Rule(*body, head) : Rule::fact(head);
      out.push_back({std::move(r), alg.implies(body_truth, alg.atom(h)).here});
    }
  }
  return out;
}

std::vector<RuleCandidate> candidate_rules(const HtAlgebra& alg, const Universe& u,
                                           const FragmentDescriptor& frag, std::size_t max_depth,
                                           std::size_t& formula_count) {
  if (frag.normal_form) {
    formula_count = 0;
    return normal_rules(alg, u, max_depth);
  }
  const auto reps = formula_classes(alg, u, frag.allowed, max_depth);
  formula_count = reps.size();
  std::vector<RuleCandidate> out;
  for (const auto& head : reps) out.push_back({Rule::fact(head.formula), head.truth.here});
  if (frag.rule_form) {
    for (const auto& body : reps) {
      for (const auto& head : reps) {
        out.push_back({Rule(body.formula, head.formula), alg.implies(body.truth, head.truth).here});
      }
    }
  }
  return out;
}

}  // namespace

StrongEquivalence strongly_equivalent(const Program& p1, const Program& p2, const Guard& guard) {
  require_fragment(p1, p2, fragments::program_rules(), "strongly_equivalent");
  auto witness = g3_separating_model(p1, p2, guard);
  return {!witness.has_value(), std::move(witness)};
}

std::vector<Rule> unary_rules(const AtomSet& universe) {
  std::vector<Rule> out;
  for (const auto& a : universe) out.push_back(Rule::fact(Formula::atom(a)));
  for (const auto& a : universe) {
    for (const auto& b : universe) out.emplace_back(Formula::atom(a), Formula::atom(b));
  }
  return out;
}

OracleResult strong_equiv_oracle(const Program& p1, const Program& p2, const AtomSet& universe,
                                 const OracleOptions& options) {
  const AtomSet joint = joint_atoms(p1, p2);
  if (!std::includes(universe.begin(), universe.end(), joint.begin(), joint.end())) {
    throw std::invalid_argument("universe does not contain every atom of the programs");
  }
  options.guard.check("oracle universe size", universe.size(), limits::oracle_atoms);
  if (universe.size() > 5) {
    // 2^30 extensions and 32-element subset tables are the representation limit.
    throw std::invalid_argument("strong_equiv_oracle supports at most 5 atoms");
  }
  const Universe u(universe);
  const auto rules = unary_rules(universe);
  const std::size_t subsets = std::size_t{1} << u.size();

  OracleTables t;
  t.reduct_models_1 = reduct_model_table(p1, u);
  t.reduct_models_2 = reduct_model_table(p2, u);
  t.below.assign(subsets, 0);
  for (AtomMask x = 0; x < subsets; ++x) {
    for_each_submask(x, [&](AtomMask y) { t.below[x] |= SubsetBits{1} << y; });
  }
  for (const auto& r : rules) {
    const CompiledFormula f(r.as_formula(), u);
    SubsetBits m = 0;
    for (AtomMask y = 0; y < subsets; ++y) {
      if (f.evaluate(ClassicalDomain{y})) m |= SubsetBits{1} << y;
    }
    t.rule_models.push_back(m);
  }
  const SubsetBits all_subsets =
      subsets == 32 ? ~SubsetBits{0} : static_cast<SubsetBits>((SubsetBits{1} << subsets) - 1);

  const std::uint64_t total = std::uint64_t{1} << rules.size();
  const std::size_t workers =
      static_cast<std::size_t>(std::clamp<std::uint64_t>(options.threads, 1, total));
  std::vector<std::optional<ExtensionKey>> partial(workers);
  if (workers == 1) {
    partial[0] = scan_extensions(t, 0, total, all_subsets);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::uint64_t first = total * w / workers;
      const std::uint64_t last = total * (w + 1) / workers;
      pool.emplace_back([&, w, first, last] { partial[w] = scan_extensions(t, first, last, all_subsets); });
    }
    for (auto& th : pool) th.join();
  }
  std::optional<ExtensionKey> best;
  for (const auto& k : partial) {
    if (k && (!best || *k < *best)) best = k;
  }

  OracleResult result;
  result.equivalent = !best.has_value();
  if (best) {
    std::vector<Rule> chosen;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if ((best->mask >> i) & 1U) chosen.push_back(rules[i]);
    }
    result.separating_extension = Program(std::move(chosen));
  }
  return result;
}

bool negfree_strong_equiv(const Program& p1, const Program& p2, const Guard& guard) {
  require_fragment(p1, p2, fragments::negation_free_rules(), "negfree_strong_equiv");
  return cpl_equivalent(p1, p2, guard);
}

EquivalenceReport classify(const Program& p1, const Program& p2, const Guard& guard,
                           std::size_t threads) {
  EquivalenceReport r;
  r.separating_world = cpl_separating_world(p1, p2, guard);
  r.cpl = !r.separating_world;
  r.separating_ht_model = g3_separating_model(p1, p2, guard);
  r.g3 = !r.separating_ht_model;
  r.strongly_equivalent = r.g3;
  const auto frag = fragments::program_rules();
  if (fragment_check(p1, frag) && fragment_check(p2, frag)) r.kc_on_fragment = r.g3;

  const AtomSet joint = joint_atoms(p1, p2);
  r.same_answer_sets = answer_sets_ht(p1, joint, guard).answer_sets ==
                       answer_sets_ht(p2, joint, guard).answer_sets;
  if (!r.g3 && joint.size() <= limits::oracle_atoms) {
    r.separating_extension =
        strong_equiv_oracle(p1, p2, joint, OracleOptions{threads, guard}).separating_extension;
  }
  return r;
}

ExpressibilityResult expressibility_search(const Program& target, const FragmentDescriptor& frag,
                                           std::size_t max_depth, const Guard& guard) {
  const AtomSet& universe = target.universe();
  guard.check("expressibility universe size", universe.size(), limits::expressibility_atoms);
  guard.check("expressibility depth", max_depth, limits::expressibility_depth);
  if (universe.size() > 4) {
    throw std::invalid_argument("expressibility_search supports at most 4 atoms");
  }
  const Universe u(universe);
  const HtAlgebra alg(u.size());
  const ModelSet wanted = alg.program_models(target, u);

  ExpressibilityResult result;
  auto candidates = candidate_rules(alg, u, frag, max_depth, result.distinct_formulas);

  // Keep one rule per model set, and only those holding in every target model.
  std::unordered_map<ModelSet, std::size_t> seen;
  std::vector<RuleCandidate> sound;
  for (auto& c : candidates) {
    if (!seen.emplace(c.models, seen.size()).second) continue;
    if ((wanted & ~c.models).none()) sound.push_back(std::move(c));
  }
  result.distinct_rules = seen.size();

  ModelSet meet = alg.all();
  for (const auto& c : sound) meet &= c.models;
  if (meet != wanted) return result;

  // Greedy cover: repeatedly add the rule excluding the most remaining models.
  std::vector<Rule> chosen;
  ModelSet current = alg.all();
  while (current != wanted) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < sound.size(); ++i) {
      const std::size_t gain = (current & ~sound[i].models).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    chosen.push_back(sound[best].rule);
    current &= sound[best].models;
  }
  result.program = Program(std::move(chosen), universe);
  return result;
}

}  // namespace hteq
