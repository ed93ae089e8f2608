#include <gtest/gtest.h>

#include <hteq/error.hpp>
#include <hteq/generate.hpp>
#include <hteq/ht.hpp>
#include <hteq/parser.hpp>

#include "naive.hpp"

using namespace hteq;

namespace {

const ConnectiveSet all{Connective::top,         Connective::bot,
                        Connective::negation,    Connective::conjunction,
                        Connective::disjunction, Connective::implication};

}  // namespace

TEST(HTModel, RequiresHereWithinThere) {
  EXPECT_NO_THROW(HTModel(make_atoms({"p"}), make_atoms({"p", "q"})));
  EXPECT_THROW(HTModel(make_atoms({"q"}), make_atoms({"p"})), std::invalid_argument);
  EXPECT_TRUE(HTModel(make_atoms({"p"}), make_atoms({"p"})).total());
}

TEST(HTModel, OrderIsThereThenHere) {
  const HTModel a({}, make_atoms({"p"}));
  const HTModel b(make_atoms({"p"}), make_atoms({"p"}));
  const HTModel c({}, make_atoms({"q"}));
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
}

TEST(HT, ForcingMatchesReference) {
  Generator gen(41);
  const AtomSet atoms = Generator::atoms(3);
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen.formula(atoms, all, 4);
    for (const auto& x : naive::subsets(atoms)) {
      for (const auto& y : naive::subsets(x)) {
        const HTModel m(y, x);
        ASSERT_EQ(ht_forces(m, HtWorld::here, f), naive::ht_forces(y, x, true, f)) << render(f);
        ASSERT_EQ(ht_forces(m, HtWorld::there, f), naive::holds(x, f)) << render(f);
      }
    }
  }
}

TEST(HT, AsKripkeAgrees) {
  const HTModel m(make_atoms({"p"}), make_atoms({"p", "q"}));
  const KripkeModel k = m.as_kripke();
  EXPECT_TRUE(validate(k).ok());
  for (const char* text : {"q | not q", "not not q -> q", "p & (q -> p)"}) {
    const Formula f = parse_formula(text);
    EXPECT_EQ(forces(k, 0, f), ht_forces(m, HtWorld::here, f)) << text;
    EXPECT_EQ(forces(k, 1, f), ht_forces(m, HtWorld::there, f)) << text;
  }
}

TEST(G3, MatrixMatchesReferenceTables) {
  Generator gen(42);
  const AtomSet atoms = Generator::atoms(2);
  const std::vector<Atom> list(atoms.begin(), atoms.end());
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen.formula(atoms, all, 4);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const G3Valuation v{{list[0], G3Value(a)}, {list[1], G3Value(b)}};
        const int expected = naive::goedel([&](const Atom& x) { return x == list[0] ? a : b; }, f);
        ASSERT_EQ(static_cast<int>(matrix_eval(v, f)), expected) << render(f);
      }
    }
  }
}

TEST(G3, ValuationsAndModelsCorrespond) {
  const HTModel m(make_atoms({"p"}), make_atoms({"p", "q"}));
  const G3Valuation v = valuation_of(m);
  EXPECT_EQ(v.at(Atom("p")), G3Value::one);
  EXPECT_EQ(v.at(Atom("q")), G3Value::half);
  EXPECT_EQ(model_of(v), m);
}

TEST(G3, ModelsOfMatchReference) {
  Generator gen(43);
  for (int i = 0; i < 200; ++i) {
    const AtomSet atoms = Generator::atoms(1 + gen.below(3));
    const Program p = gen.rule_program(atoms, all, 3, 3);
    std::set<std::pair<AtomSet, AtomSet>> got;
    const auto models = ht_models_of(p, atoms);
    for (const auto& m : models) got.emplace(m.here(), m.there());
    EXPECT_EQ(got, naive::ht_models(p, atoms)) << render(p);
    EXPECT_TRUE(std::is_sorted(models.begin(), models.end()));
  }
}

TEST(G3, Validity) {
  EXPECT_TRUE(g3_valid(parse_formula("not p | not not p")));
  EXPECT_TRUE(g3_valid(parse_formula("p | (p -> q) | not q")));
  EXPECT_FALSE(g3_valid(parse_formula("p | not p")));
  EXPECT_FALSE(g3_valid(parse_formula("not not p -> p")));
  Generator gen(44);
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen.formula(Generator::atoms(3), all, 4);
    EXPECT_EQ(g3_valid(f), naive::goedel_valid(f)) << render(f);
  }
}

TEST(G3, CountermodelsRefute) {
  const auto m = g3_countermodel({parse_formula("not not p")}, parse_formula("p"));
  ASSERT_TRUE(m);
  EXPECT_TRUE(ht_forces(*m, HtWorld::here, parse_formula("not not p")));
  EXPECT_FALSE(ht_forces(*m, HtWorld::here, parse_formula("p")));
  EXPECT_TRUE(g3_entails({parse_formula("p"), parse_formula("p -> q")}, parse_formula("q")));
}

TEST(G3, ProgramEquivalence) {
  EXPECT_TRUE(g3_equivalent(parse_program("p | q."), parse_program("((p -> q) -> q) & ((q -> p) -> p).")));
  EXPECT_FALSE(g3_equivalent(parse_program("not not p."), parse_program("p.")));
  const auto w = g3_separating_model(parse_program("not not p."), parse_program("p."));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, HTModel({}, make_atoms({"p"})));
}

TEST(G3, GuardOnLargeUniverses) {
  AtomSet big;
  for (int i = 0; i < 13; ++i) big.insert(Atom("a" + std::to_string(i)));
  EXPECT_THROW(ht_models_of(Program{}, big), GuardExceeded);
}
