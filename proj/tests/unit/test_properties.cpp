#include <gtest/gtest.h>

#include <hteq/classical.hpp>
#include <hteq/generate.hpp>
#include <hteq/ht.hpp>
#include <hteq/kripke.hpp>
#include <hteq/parser.hpp>
#include <hteq/stable.hpp>

#include "naive.hpp"

using namespace hteq;

namespace {

const ConnectiveSet rule_connectives{Connective::conjunction, Connective::disjunction,
                                     Connective::negation};
const AtomSet fresh = make_atoms({"z1", "z2"});

AtomSet joined(AtomSet a, const AtomSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace

TEST(FreshAtoms, DoNotChangeClassicalEquivalence) {
  Generator gen(81);
  for (int i = 0; i < 200; ++i) {
    const AtomSet atoms = Generator::atoms(1 + gen.below(3));
    const Program a = gen.rule_program(atoms, rule_connectives, 3, 2);
    const Program b = gen.rule_program(atoms, rule_connectives, 3, 2);
    const AtomSet u = joined(joined(a.atoms(), b.atoms()), fresh);
    bool same_wide = true;
    for (const auto& w : naive::subsets(u)) same_wide = same_wide && naive::holds(w, a) == naive::holds(w, b);
    EXPECT_EQ(cpl_equivalent(a, b), same_wide) << render(a) << " / " << render(b);
    EXPECT_EQ(cpl_equivalent(a.with_universe(fresh), b), cpl_equivalent(a, b));
  }
}

TEST(FreshAtoms, DoNotChangeG3Entailment) {
  Generator gen(82);
  const ConnectiveSet all{Connective::negation, Connective::conjunction, Connective::disjunction,
                          Connective::implication};
  for (int i = 0; i < 200; ++i) {
    const AtomSet atoms = Generator::atoms(2);
    const Formula premise = gen.formula(atoms, all, 2);
    const Formula goal = gen.formula(atoms, all, 3);
    const AtomSet u = joined(atoms, fresh);
    bool entailed = true;
    for (const auto& x : naive::subsets(u)) {
      for (const auto& y : naive::subsets(x)) {
        if (naive::ht_forces(y, x, true, premise) && !naive::ht_forces(y, x, true, goal)) entailed = false;
      }
    }
    EXPECT_EQ(g3_entails({premise}, goal), entailed) << render(premise) << " |- " << render(goal);
  }
}

TEST(FreshAtoms, NeverAppearInAnswerSets) {
  Generator gen(83);
  for (int i = 0; i < 200; ++i) {
    const AtomSet atoms = Generator::atoms(1 + gen.below(3));
    const Program p = gen.rule_program(atoms, rule_connectives, 4, 2);
    const AtomSet u = joined(p.universe(), fresh);
    const auto wide = answer_sets_reduct(p, u).answer_sets;
    EXPECT_EQ(wide, answer_sets_reduct(p, p.universe()).answer_sets) << render(p);
    for (const auto& s : wide) {
      for (const auto& z : fresh) EXPECT_FALSE(s.count(z));
    }
  }
}

TEST(Reduct, ImplicationIntoBotIsNotNegation) {
  const Program neg = parse_program("not p. q | p.");
  const Program imp = parse_program("p -> bot. q | p.");
  EXPECT_EQ(reduct(imp, make_atoms({"q"})).rules, imp);
  EXPECT_NE(reduct(neg, make_atoms({"q"})).rules, neg);
  for (auto m : {AnswerSetMethod::reduct, AnswerSetMethod::equilibrium}) {
    EXPECT_EQ(answer_sets(neg, m).answer_sets, answer_sets(imp, m).answer_sets);
    EXPECT_EQ(answer_sets(neg, m).answer_sets, std::vector<AtomSet>{make_atoms({"q"})});
  }
}

TEST(KripkeExamples, ChainForcing) {
  const KripkeModel chain({{}, make_atoms({"p"})}, {{0, 1}});
  EXPECT_TRUE(forces(chain, 0, parse_formula("not not p")));
  EXPECT_FALSE(forces(chain, 0, parse_formula("p")));
  const auto v = validate(KripkeModel({make_atoms({"p"}), {}}, {{0, 1}}));
  ASSERT_FALSE(v.ok());
}

TEST(KripkeExamples, DiamondForcesWeakExcludedMiddle) {
  // The top world carries p and sits above every world, so not not p holds
  // everywhere; a single-top model cannot refute weak excluded middle.
  const KripkeModel d = diamond_model();
  const auto tops = d.terminal_nodes();
  ASSERT_EQ(tops.size(), 1u);
  EXPECT_EQ(d.label(tops[0]), make_atoms({"p", "q"}));
  naive::Model ref{{}, d.labels()};
  for (WorldId a = 0; a < d.world_count(); ++a) {
    ref.leq.emplace_back();
    for (WorldId b = 0; b < d.world_count(); ++b) ref.leq[a].push_back(d.leq(a, b));
  }
  const Formula wem = parse_formula("not p | not not p");
  const WorldId w = *d.root();
  EXPECT_TRUE(naive::forces(ref, w, parse_formula("not not p")));
  EXPECT_TRUE(naive::forces(ref, w, wem));
  EXPECT_TRUE(forces(d, w, wem));
  EXPECT_FALSE(forces(d, w, parse_formula("p | q")));
}

TEST(KripkeExamples, SingleTopCensusIncludesTheChain) {
  const auto models = all_models(2, make_atoms({"p"}), FrameClass::single_top);
  const KripkeModel chain({{}, make_atoms({"p"})}, {{0, 1}});
  EXPECT_NE(std::find(models.begin(), models.end(), chain), models.end());
}

TEST(KripkeExamples, NormalAxiomInstanceHasAForkCountermodel) {
  const std::vector<Formula> premises = {parse_formula("p & not p -> bot"),
                                         parse_formula("not p -> not p | not not p"),
                                         parse_formula("not not p -> not p | not not p")};
  const Formula goal = parse_formula("not bot -> not p | not not p");
  const auto cm = countermodel_search(premises, goal, FrameClass::any, 3);
  ASSERT_TRUE(cm);
  EXPECT_EQ(cm->model.world_count(), 3u);
  EXPECT_EQ(cm->model.terminal_nodes().size(), 2u);
  EXPECT_TRUE(is_countermodel(*cm, premises, goal));
}

TEST(KripkeExamples, PeirceChain) {
  const auto cm = countermodel_search({}, parse_formula("((p -> q) -> p) -> p"), FrameClass::single_top, 2);
  ASSERT_TRUE(cm);
  const KripkeModel chain({{}, make_atoms({"p"})}, {{0, 1}});
  EXPECT_EQ(cm->model, chain);
  EXPECT_EQ(cm->witness, 0u);
}
