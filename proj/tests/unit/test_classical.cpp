#include <gtest/gtest.h>

#include <hteq/classical.hpp>
#include <hteq/error.hpp>
#include <hteq/generate.hpp>
#include <hteq/parser.hpp>

#include "naive.hpp"

using namespace hteq;

TEST(Classical, EvaluationMatchesReference) {
  Generator gen(21);
  const ConnectiveSet all{Connective::top,         Connective::bot,
                          Connective::negation,    Connective::conjunction,
                          Connective::disjunction, Connective::implication};
  const AtomSet atoms = Generator::atoms(3);
  for (int i = 0; i < 500; ++i) {
    const Formula f = gen.formula(atoms, all, 4);
    for (const auto& w : naive::subsets(atoms)) {
      EXPECT_EQ(eval_classical(w, f), naive::holds(w, f)) << render(f) << " at " << render(w);
    }
  }
}

TEST(Classical, ModelsInCanonicalOrder) {
  const auto models = classical_models(parse_program("p | q."), make_atoms({"p", "q"}));
  ASSERT_EQ(models.size(), 3u);
  EXPECT_EQ(models[0], make_atoms({"p"}));
  EXPECT_EQ(models[1], make_atoms({"q"}));
  EXPECT_EQ(models[2], make_atoms({"p", "q"}));
}

TEST(Classical, Intersection) {
  EXPECT_EQ(models_intersection(parse_program("p. p -> q. r | s.")), make_atoms({"p", "q"}));
  EXPECT_FALSE(models_intersection(parse_program("p. p -> bot.")));
}

TEST(Classical, LeastModelOfHornPrograms) {
  const auto m = minimal_model(parse_program("p. p & q -> r. p -> s. s -> t."));
  ASSERT_TRUE(m.satisfiable());
  EXPECT_EQ(*m.model, make_atoms({"p", "s", "t"}));
  EXPECT_FALSE(minimal_model(parse_program("p. p -> bot.")).satisfiable());
  EXPECT_THROW(minimal_model(parse_program("p | q.")), FragmentError);
}

TEST(Classical, LeastModelIsTheIntersection) {
  Generator gen(22);
  for (int i = 0; i < 300; ++i) {
    const Program p = gen.horn_program(Generator::atoms(4), 5, 2);
    const auto least = minimal_model(p);
    const auto inter = models_intersection(p);
    ASSERT_EQ(least.model.has_value(), inter.has_value()) << render(p);
    if (inter) {
      EXPECT_EQ(*least.model, *inter);
      EXPECT_TRUE(naive::holds(*inter, p)) << render(p);
    }
  }
}

TEST(Classical, EquivalenceAndEntailment) {
  EXPECT_TRUE(cpl_equivalent(parse_program("not not p."), parse_program("p.")));
  EXPECT_FALSE(cpl_equivalent(parse_program("p -> q."), parse_program("q -> p.")));
  const auto w = cpl_separating_world(parse_program("p -> q."), parse_program("q -> p."));
  ASSERT_TRUE(w);
  EXPECT_NE(naive::holds(*w, parse_program("p -> q.")), naive::holds(*w, parse_program("q -> p.")));
  EXPECT_TRUE(cpl_entails({parse_formula("p"), parse_formula("p -> q")}, parse_formula("q")));
  EXPECT_TRUE(cpl_entails({}, parse_formula("p | not p")));
  EXPECT_FALSE(cpl_entails({parse_formula("p | q")}, parse_formula("p")));
}

TEST(Classical, GuardRefusesLargeUniverses) {
  AtomSet big;
  for (int i = 0; i < 22; ++i) big.insert(Atom("a" + std::to_string(i)));
  EXPECT_THROW(classical_models(Program{}, big), GuardExceeded);
}
