#include <gtest/gtest.h>

#include <hteq/error.hpp>
#include <hteq/generate.hpp>
#include <hteq/parser.hpp>
#include <hteq/stable.hpp>

#include "naive.hpp"

using namespace hteq;

namespace {

std::vector<AtomSet> sets(const char* program, AnswerSetMethod m = AnswerSetMethod::reduct) {
  return answer_sets(parse_program(program), m).answer_sets;
}

}  // namespace

TEST(Reduct, ReplacesNegations) {
  const AtomSet x = make_atoms({"p"});
  EXPECT_EQ(reduct(parse_formula("not p -> q"), x), parse_formula("bot -> q"));
  EXPECT_EQ(reduct(parse_formula("not q -> p"), x), parse_formula("top -> p"));
  EXPECT_EQ(reduct(parse_formula("not not p"), x), Formula::top());
  // Implications into bot are not negations.
  EXPECT_EQ(reduct(parse_formula("p -> bot"), x), parse_formula("p -> bot"));
}

TEST(Reduct, ProgramKeepsSourceUniverse) {
  const Program p = parse_program("not q -> p. r.");
  const Reduct r = reduct(p, make_atoms({"p"}));
  EXPECT_EQ(r.source, p);
  EXPECT_EQ(r.witness, make_atoms({"p"}));
  EXPECT_EQ(r.rules.universe(), p.universe());
  EXPECT_TRUE(r.rules.rules().count(parse_rule("p")));
}

TEST(AnswerSets, WorkedExamples) {
  EXPECT_TRUE(sets("not not p.").empty());
  EXPECT_EQ(sets("not not p. p."), (std::vector<AtomSet>{make_atoms({"p"})}));
  EXPECT_EQ(sets("p | q."), (std::vector<AtomSet>{make_atoms({"p"}), make_atoms({"q"})}));
  EXPECT_EQ(sets("p -> q."), (std::vector<AtomSet>{AtomSet{}}));
  EXPECT_EQ(sets("q -> p."), (std::vector<AtomSet>{AtomSet{}}));
  EXPECT_EQ(sets("not p -> q. not q -> p."),
            (std::vector<AtomSet>{make_atoms({"p"}), make_atoms({"q"})}));
  EXPECT_TRUE(sets("not p -> p.").empty());
  for (const char* text : {"not not p.", "p | q.", "not p -> q. not q -> p.", "not p -> p."}) {
    EXPECT_EQ(sets(text), sets(text, AnswerSetMethod::equilibrium)) << text;
  }
}

TEST(AnswerSets, UniverseCanBeWidened) {
  const Program p = parse_program("not q -> p.");
  EXPECT_EQ(answer_sets_reduct(p, make_atoms({"p", "q", "z"})).answer_sets,
            (std::vector<AtomSet>{make_atoms({"p"})}));
}

TEST(AnswerSets, MatchReferenceOnRandomPrograms) {
  Generator gen(51);
  const ConnectiveSet allowed{Connective::conjunction, Connective::disjunction, Connective::negation};
  for (int i = 0; i < 300; ++i) {
    const AtomSet atoms = Generator::atoms(1 + gen.below(4));
    const Program p = gen.rule_program(atoms, allowed, 4, 3);
    const auto expected = naive::answer_sets(p, atoms);
    for (auto m : {AnswerSetMethod::reduct, AnswerSetMethod::equilibrium}) {
      const auto report = m == AnswerSetMethod::reduct ? answer_sets_reduct(p, atoms)
                                                       : answer_sets_ht(p, atoms);
      EXPECT_EQ(std::set<AtomSet>(report.answer_sets.begin(), report.answer_sets.end()), expected)
          << render(p);
      EXPECT_TRUE(std::is_sorted(report.answer_sets.begin(), report.answer_sets.end(), canonical_less));
      EXPECT_EQ(report.method, m);
    }
    for (const auto& x : naive::subsets(atoms)) EXPECT_EQ(is_answer_set(p, x), expected.count(x) > 0);
  }
}

TEST(AnswerSets, MethodNames) {
  EXPECT_EQ(method_name(AnswerSetMethod::reduct), "reduct");
  EXPECT_EQ(method_name(AnswerSetMethod::equilibrium), "equilibrium");
}
