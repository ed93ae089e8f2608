#include "hteq_tools/suites.hpp"

#include <unordered_set>

#include <hteq/classical.hpp>
#include <hteq/equivalence.hpp>
#include <hteq/evaluation.hpp>
#include <hteq/generate.hpp>
#include <hteq/ht.hpp>
#include <hteq/kripke.hpp>
#include <hteq/parser.hpp>
#include <hteq/prover.hpp>
#include <hteq/stable.hpp>

namespace hteq::suite {

namespace {

const ConnectiveSet all_connectives{Connective::top,         Connective::bot,
                                    Connective::negation,    Connective::conjunction,
                                    Connective::disjunction, Connective::implication};
const ConnectiveSet positive{Connective::top, Connective::bot, Connective::conjunction,
                             Connective::disjunction};

Formula atom(const char* name) { return Formula::atom(name); }
Formula neg(const Formula& f) { return Formula::negation(f); }
Formula conj(const Formula& a, const Formula& b) { return Formula::conjunction(a, b); }
Formula disj(const Formula& a, const Formula& b) { return Formula::disjunction(a, b); }
Formula imp(const Formula& a, const Formula& b) { return Formula::implication(a, b); }
Formula iff(const Formula& a, const Formula& b) { return conj(imp(a, b), imp(b, a)); }

std::uint64_t bit(bool b) { return b ? 1U : 0U; }

std::uint64_t ht_bits(const HTModel& m, const Formula& f) {
  return bit(ht_forces(m, HtWorld::here, f)) | bit(ht_forces(m, HtWorld::there, f)) << 1;
}

std::vector<HTModel> all_ht_models(const AtomSet& atoms) { return ht_models_of(Program{}, atoms); }

/// Worlds whose label classically satisfies f.
WorldMask classical_set(const KripkeModel& m, const Formula& f) {
  WorldMask out = 0;
  for (std::size_t w = 0; w < m.world_count(); ++w) {
    if (eval_classical(m.label(w), f)) out |= WorldMask{1} << w;
  }
  return out;
}

std::string describe(const KripkeModel& m) {
  std::string out = "model with labels";
  for (std::size_t w = 0; w < m.world_count(); ++w) out += " " + render(m.label(w));
  return out;
}

std::string describe(const HTModel& m) {
  return "<" + render(m.here()) + ", " + render(m.there()) + ">";
}

}  // namespace

void Outcome::fail(std::string what) {
  if (violations++ == 0) first_violation = std::move(what);
}

std::vector<Formula> key_classes(const AtomSet& atoms, ConnectiveSet allowed,
                                 std::size_t max_depth,
                                 const std::function<std::uint64_t(const Formula&)>& key) {
  std::vector<Formula> reps;
  std::unordered_set<std::uint64_t> seen;
  auto offer = [&](Formula f) {
    if (seen.insert(key(f)).second) reps.push_back(std::move(f));
  };
  for (const auto& a : atoms) offer(Formula::atom(a));
  if (allowed.contains(Connective::top)) offer(Formula::top());
  if (allowed.contains(Connective::bot)) offer(Formula::bot());
  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    const std::size_t n = reps.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (allowed.contains(Connective::negation)) offer(neg(reps[i]));
      for (std::size_t j = 0; j < n; ++j) {
        if (allowed.contains(Connective::conjunction)) offer(conj(reps[i], reps[j]));
        if (allowed.contains(Connective::disjunction)) offer(disj(reps[i], reps[j]));
        if (allowed.contains(Connective::implication)) offer(imp(reps[i], reps[j]));
      }
    }
  }
  return reps;
}

Outcome persistence() {
  Outcome out;
  for (const auto& m : all_models(3, Generator::atoms(3), FrameClass::any)) {
    auto key = [&](const Formula& f) -> std::uint64_t { return forcing_set(m, f); };
    for (const auto& f : key_classes(Generator::atoms(3), all_connectives, 4, key)) {
      ++out.checked;
      const WorldMask forced = forcing_set(m, f);
      for (std::size_t w = 0; w < m.world_count(); ++w) {
        if ((forced >> w) & 1U && (m.up(w) & ~forced) != 0) {
          out.fail(render(f) + " forced at " + std::to_string(w) + " but not above it in " +
                   describe(m));
        }
      }
    }
  }
  return out;
}

Outcome forcing_matches_classical_on_positive_fragment() {
  Outcome out;
  const AtomSet atoms = Generator::atoms(3);
  for (const auto& m : all_models(3, atoms, FrameClass::any)) {
    auto key = [&](const Formula& f) -> std::uint64_t {
      return forcing_set(m, f) | std::uint64_t{classical_set(m, f)} << 8;
    };
    for (const auto& a : key_classes(atoms, positive, 4, key)) {
      ++out.checked;
      if (forcing_set(m, a) != classical_set(m, a)) {
        out.fail(render(a) + " forced differently from its classical value in " + describe(m));
      }
    }
    const auto parts = key_classes(atoms, positive, 3, key);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        ++out.checked;
        const Formula f = imp(a, b);
        if ((forcing_set(m, f) & ~classical_set(m, f)) != 0) {
          out.fail(render(f) + " forced where it is classically false in " + describe(m));
        }
      }
    }
  }
  return out;
}

Outcome ht_implication_splits() {
  Outcome out;
  const AtomSet atoms = Generator::atoms(3);
  for (const auto& m : all_ht_models(atoms)) {
    auto key = [&](const Formula& f) -> std::uint64_t {
      return ht_bits(m, f) | bit(eval_classical(m.there(), f)) << 2 |
             bit(eval_classical(m.here(), f)) << 3;
    };
    const auto parts = key_classes(atoms, positive, 3, key);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        ++out.checked;
        const Formula f = imp(a, b);
        const bool split = eval_classical(m.there(), f) && eval_classical(m.here(), f);
        if (ht_forces(m, HtWorld::here, f) != split) {
          out.fail(render(f) + " in " + describe(m));
        }
      }
    }
  }
  return out;
}

Outcome reduct_preserves_ht_forcing() {
  Outcome out;
  const AtomSet atoms = Generator::atoms(3);
  for (const auto& m : all_ht_models(atoms)) {
    auto key = [&](const Formula& f) -> std::uint64_t {
      return ht_bits(m, f) | ht_bits(m, reduct(f, m.there())) << 2 |
             bit(eval_classical(m.there(), f)) << 4;
    };
    for (const auto& f : key_classes(atoms, all_connectives, 4, key)) {
      ++out.checked;
      if (ht_bits(m, f) != ht_bits(m, reduct(f, m.there()))) {
        out.fail(render(f) + " vs its reduct in " + describe(m));
      }
    }
  }
  return out;
}

Outcome matrix_matches_ht() {
  Outcome out;
  const AtomSet atoms = Generator::atoms(3);
  for (const auto& m : all_ht_models(atoms)) {
    const G3Valuation v = valuation_of(m);
    auto key = [&](const Formula& f) -> std::uint64_t {
      return static_cast<std::uint64_t>(matrix_eval(v, f)) | ht_bits(m, f) << 2;
    };
    for (const auto& f : key_classes(atoms, all_connectives, 4, key)) {
      ++out.checked;
      const G3Value value = matrix_eval(v, f);
      if ((value == G3Value::one) != ht_forces(m, HtWorld::here, f) ||
          (value != G3Value::zero) != ht_forces(m, HtWorld::there, f)) {
        out.fail(render(f) + " in " + describe(m));
      }
    }
  }
  return out;
}

Outcome one_world_matches_classical() {
  Outcome out;
  const AtomSet atoms = Generator::atoms(3);
  for (const auto& m : all_models(1, atoms, FrameClass::any)) {
    auto key = [&](const Formula& f) -> std::uint64_t {
      return forcing_set(m, f) | bit(eval_classical(m.label(0), f)) << 1;
    };
    for (const auto& f : key_classes(atoms, all_connectives, 4, key)) {
      ++out.checked;
      if (forces(m, 0, f) != eval_classical(m.label(0), f)) {
        out.fail(render(f) + " in " + describe(m));
      }
    }
  }
  return out;
}

Outcome single_top_forces_weak_excluded_middle() {
  Outcome out;
  const AtomSet atoms = Generator::atoms(2);
  std::size_t models = 0;
  enumerate_models(5, atoms, FrameClass::single_top, [&](const KripkeModel& m) {
    ++models;
    auto key = [&](const Formula& f) -> std::uint64_t { return forcing_set(m, f); };
    for (const auto& a : key_classes(atoms, all_connectives, 3, key)) {
      ++out.checked;
      if (forcing_set(m, disj(neg(a), neg(neg(a)))) != m.all_worlds()) {
        out.fail("weak excluded middle for " + render(a) + " fails in " + describe(m));
      }
    }
    return true;
  });
  out.info = std::to_string(models) + " models";
  return out;
}

std::vector<Formula> g3_axiom_instances() {
  const Formula a = atom("p");
  const Formula b = atom("q");
  const Formula c = atom("r");
  const Formula d = atom("s");
  return {
      imp(imp(neg(a), b), imp(imp(imp(b, a), b), b)),
      disj(disj(disj(disj(disj(iff(a, b), iff(a, c)), iff(a, d)), iff(b, c)), iff(b, d)),
           iff(c, d)),
      disj(disj(a, imp(a, b)), neg(b)),
      conj(imp(imp(imp(a, imp(imp(imp(b, c), b), b)), a), a), disj(neg(a), neg(neg(a)))),
  };
}

Outcome g3_axioms() {
  Outcome out;
  std::size_t index = 0;
  for (const auto& f : g3_axiom_instances()) {
    ++index;
    const Universe u(f.atoms());
    std::size_t valuations = 1;
    for (std::size_t i = 0; i < u.size(); ++i) valuations *= 3;
    for (std::size_t code = 0; code < valuations; ++code) {
      G3Valuation v;
      std::size_t c = code;
      for (const auto& a : u.atoms()) {
        v[a] = static_cast<G3Value>(c % 3);
        c /= 3;
      }
      ++out.checked;
      if (matrix_eval(v, f) != G3Value::one) {
        out.fail("axiom " + std::to_string(index) + " below one under a valuation");
      }
    }
    ++out.checked;
    if (!cpl_entails({}, f)) out.fail("axiom " + std::to_string(index) + " not classically valid");
    ++out.checked;
    if (!g3_valid(f)) out.fail("axiom " + std::to_string(index) + " has an HT countermodel");
    ++out.checked;
    if (ipl_search({}, f).derivation) {
      out.fail("axiom " + std::to_string(index) + " is intuitionistically provable");
    }
  }
  return out;
}

Outcome diamond_property() {
  Outcome out;
  const KripkeModel m = diamond_model();
  const ConnectiveSet allowed{Connective::conjunction, Connective::implication,
                              Connective::negation};
  for (const auto& f : enumerate_formulas(make_atoms({"p", "q"}), allowed, 3)) {
    ++out.checked;
    const WorldMask s = forcing_set(m, f);
    const bool at_w = (s >> diamond::w) & 1U;
    const bool at_u_and_v = ((s >> diamond::u) & 1U) && ((s >> diamond::v) & 1U);
    if (at_w != at_u_and_v) out.fail(render(f));
  }
  return out;
}

Outcome method_agreement(std::uint64_t seed, std::size_t count) {
  Outcome out;
  Generator gen(seed);
  const ConnectiveSet allowed{Connective::conjunction, Connective::disjunction,
                              Connective::negation};
  std::size_t with_answer_sets = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const AtomSet atoms = Generator::atoms(1 + gen.below(4));
    const Program p = gen.rule_program(atoms, allowed, 4, 3);
    ++out.checked;
    const auto by_reduct = answer_sets_reduct(p, atoms).answer_sets;
    if (by_reduct != answer_sets_ht(p, atoms).answer_sets) out.fail(render(p));
    if (!by_reduct.empty()) ++with_answer_sets;
  }
  out.info = std::to_string(with_answer_sets) + " programs with answer sets";
  return out;
}

Outcome oracle_agreement(std::uint64_t seed, std::size_t count, std::size_t threads) {
  Outcome out;
  Generator gen(seed);
  const ConnectiveSet allowed{Connective::conjunction, Connective::disjunction,
                              Connective::negation,    Connective::top,
                              Connective::bot};
  std::size_t equivalent = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const AtomSet atoms = Generator::atoms(1 + gen.below(3));
    const Program p1 = gen.rule_program(atoms, allowed, 3, 2);
    std::vector<Rule> rules2;
    switch (i % 3) {
      case 0: {
        const Program other = gen.rule_program(atoms, allowed, 3, 2);
        rules2.assign(other.rules().begin(), other.rules().end());
        break;
      }
      case 1: {
        // Adding a rule weaker than an existing one keeps the program.
        rules2.assign(p1.rules().begin(), p1.rules().end());
        const Rule& r = rules2[gen.below(rules2.size())];
        rules2.emplace_back(conj(r.body(), gen.formula(atoms, allowed, 1)), r.head());
        break;
      }
      default: {
        rules2.assign(p1.rules().begin(), p1.rules().end());
        Rule& r = rules2[gen.below(rules2.size())];
        r = Rule(r.body(), gen.formula(atoms, allowed, 2));
        break;
      }
    }
    const Program p2(std::move(rules2));
    AtomSet joint = p1.atoms();
    const AtomSet a2 = p2.atoms();
    joint.insert(a2.begin(), a2.end());

    ++out.checked;
    const auto se = strongly_equivalent(p1, p2);
    const auto oracle = strong_equiv_oracle(p1, p2, joint, OracleOptions{threads, {}});
    if (se.equivalent) ++equivalent;
    if (se.equivalent != oracle.equivalent) {
      out.fail(render(p1) + " vs " + render(p2));
      continue;
    }
    if (se.witness && ht_satisfies(*se.witness, p1) == ht_satisfies(*se.witness, p2)) {
      out.fail("HT witness does not separate " + render(p1) + " and " + render(p2));
    }
    if (oracle.separating_extension) {
      const Program& e = *oracle.separating_extension;
      if (answer_sets_reduct(p1.united(e), joint).answer_sets ==
          answer_sets_reduct(p2.united(e), joint).answer_sets) {
        out.fail("extension does not separate " + render(p1) + " and " + render(p2));
      }
    }
  }
  out.info = std::to_string(equivalent) + " strongly equivalent pairs";
  return out;
}

Outcome horn_intersection_is_model(std::uint64_t seed, std::size_t count) {
  Outcome out;
  Generator gen(seed);
  std::size_t attempts = 0;
  while (out.checked < count && attempts < 50 * count) {
    ++attempts;
    const Program p = gen.horn_program(Generator::atoms(1 + gen.below(5)), 5, 2);
    const auto meet = models_intersection(p);
    if (!meet) continue;
    ++out.checked;
    if (!eval_classical(*meet, p)) out.fail(render(p));
  }
  out.info = std::to_string(attempts - out.checked) + " unsatisfiable programs skipped";
  return out;
}

Outcome cpl_matches_ipl_on_negation_free(std::uint64_t seed, std::size_t count) {
  Outcome out;
  Generator gen(seed);
  const ConnectiveSet allowed{Connective::conjunction, Connective::disjunction, Connective::top,
                              Connective::bot};
  std::size_t entailed = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const AtomSet atoms = Generator::atoms(1 + gen.below(3));
    const Program premises = gen.rule_program(atoms, allowed, 3, 2);
    const Program goal = gen.rule_program(atoms, allowed, 1, 2);
    const Formula g = goal.rules().begin()->as_formula();
    ++out.checked;
    const bool cpl = cpl_entails(premises.formulas(), g);
    if (cpl) ++entailed;
    if (cpl != ipl_search(premises.formulas(), g).derivation.has_value()) {
      out.fail(render(premises) + " |- " + render(g));
    }
  }
  out.info = std::to_string(entailed) + " entailed queries";
  return out;
}

Outcome kc_matches_g3_on_fragment(std::uint64_t seed, std::size_t count) {
  Outcome out;
  Generator gen(seed);
  const ConnectiveSet allowed{Connective::conjunction, Connective::disjunction,
                              Connective::negation,    Connective::top,
                              Connective::bot};
  std::size_t provable = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const AtomSet atoms = Generator::atoms(1 + gen.below(3));
    const Program premises = gen.rule_program(atoms, allowed, 3, 2);
    const Formula goal = gen.rule_program(atoms, allowed, 1, 2).rules().begin()->as_formula();
    ++out.checked;
    const Verdict v = kc_decide(premises.formulas(), goal);
    const bool g3 = g3_entails(premises.formulas(), goal);
    if (v.unknown() || v.provable() != g3) {
      out.fail(render(premises) + " |- " + render(goal));
    } else if (v.refuted() && !(v.countermodel && v.countermodel->model.single_top() &&
                                is_countermodel(*v.countermodel, premises.formulas(), goal))) {
      out.fail("invalid countermodel for " + render(premises) + " |- " + render(goal));
    }
    if (v.provable()) ++provable;
  }
  out.info = std::to_string(provable) + " provable queries";
  return out;
}

}  // namespace hteq::suite
