#include <gtest/gtest.h>

#include <hteq/equivalence.hpp>
#include <hteq/error.hpp>
#include <hteq/generate.hpp>
#include <hteq/parser.hpp>
#include <hteq/stable.hpp>

#include "naive.hpp"

using namespace hteq;

namespace {

Program prog(const char* text) { return parse_program(text); }

}  // namespace

TEST(StrongEquivalence, WorkedPairs) {
  EXPECT_TRUE(strongly_equivalent(prog("q."), prog("not p -> q. not not p -> q.")).equivalent);
  EXPECT_TRUE(strongly_equivalent(prog("p & r -> s. not p -> q. not r -> q."),
                                  prog("p & r -> s. not p -> q. not r -> q. not s -> q."))
                  .equivalent);
  EXPECT_TRUE(strongly_equivalent(prog("not p | not not p."), prog("top.")).equivalent);
}

TEST(StrongEquivalence, WitnessSeparates) {
  const auto r = strongly_equivalent(prog("not not p."), prog("p."));
  EXPECT_FALSE(r.equivalent);
  ASSERT_TRUE(r.witness);
  EXPECT_NE(ht_satisfies(*r.witness, prog("not not p.")), ht_satisfies(*r.witness, prog("p.")));
}

TEST(StrongEquivalence, FragmentIsEnforced) {
  EXPECT_THROW(strongly_equivalent(prog("(p -> q) -> r."), prog("r.")), FragmentError);
  EXPECT_THROW(negfree_strong_equiv(prog("not p -> q."), prog("q.")), FragmentError);
  EXPECT_TRUE(negfree_strong_equiv(prog("p -> q. q -> r."), prog("p -> q. q -> r. p -> r.")));
}

TEST(Oracle, UnaryRulesOrder) {
  const auto rules = unary_rules(make_atoms({"p", "q"}));
  ASSERT_EQ(rules.size(), 6u);
  EXPECT_EQ(rules[0], parse_rule("p"));
  EXPECT_EQ(rules[1], parse_rule("q"));
  EXPECT_EQ(rules[2], parse_rule("p -> p"));
  EXPECT_EQ(rules[5], parse_rule("q -> q"));
}

TEST(Oracle, SeparatingExtension) {
  const auto r = strong_equiv_oracle(prog("p -> q."), prog("q -> p."), make_atoms({"p", "q"}));
  EXPECT_FALSE(r.equivalent);
  ASSERT_TRUE(r.separating_extension);
  EXPECT_EQ(*r.separating_extension, prog("p."));
}

TEST(Oracle, AgreesWithReferenceAndG3) {
  Generator gen(61);
  const ConnectiveSet allowed{Connective::conjunction, Connective::disjunction, Connective::negation};
  for (int i = 0; i < 60; ++i) {
    const AtomSet atoms = Generator::atoms(1 + gen.below(2));
    const Program p1 = gen.rule_program(atoms, allowed, 2, 2);
    const Program p2 = gen.rule_program(atoms, allowed, 2, 2);
    const bool reference = naive::same_under_extensions(p1, p2, atoms, unary_rules(atoms));
    EXPECT_EQ(strong_equiv_oracle(p1, p2, atoms).equivalent, reference) << render(p1) << render(p2);
    EXPECT_EQ(strongly_equivalent(p1, p2).equivalent, reference) << render(p1) << render(p2);
  }
}

TEST(Oracle, ThreadsGiveTheSameAnswer) {
  const Program a = prog("not p -> q. r | s.");
  const Program b = prog("not p -> q. r -> s. s -> r.");
  const AtomSet u = make_atoms({"p", "q", "r", "s"});
  const auto one = strong_equiv_oracle(a, b, u, {1, {}});
  const auto four = strong_equiv_oracle(a, b, u, {4, {}});
  EXPECT_EQ(one.equivalent, four.equivalent);
  EXPECT_EQ(one.separating_extension, four.separating_extension);
}

TEST(Oracle, Guard) {
  EXPECT_THROW(strong_equiv_oracle(Program{}, Program{}, Generator::atoms(5)), GuardExceeded);
}

TEST(Classify, FullReport) {
  const auto r = classify(prog("not not p."), prog("p."));
  EXPECT_TRUE(r.cpl);
  EXPECT_FALSE(r.g3);
  EXPECT_FALSE(r.strongly_equivalent);
  ASSERT_TRUE(r.kc_on_fragment);
  EXPECT_FALSE(*r.kc_on_fragment);
  EXPECT_FALSE(r.same_answer_sets);
  EXPECT_TRUE(r.separating_ht_model);
  EXPECT_FALSE(r.separating_world);
  ASSERT_TRUE(r.separating_extension);
  EXPECT_TRUE(r.separating_extension->empty());

  const auto same = classify(prog("p -> q."), prog("q -> p."));
  EXPECT_TRUE(same.same_answer_sets);
  EXPECT_FALSE(same.cpl);
  EXPECT_TRUE(same.separating_world);
  EXPECT_EQ(same.separating_extension, prog("p."));

  const auto outside = classify(prog("((p -> q) -> q) & ((q -> p) -> p)."), prog("p | q."));
  EXPECT_FALSE(outside.kc_on_fragment);
  EXPECT_TRUE(outside.g3);
}

TEST(Expressibility, DisjunctionNeedsDisjunction) {
  const auto r = expressibility_search(prog("p | q."), FragmentDescriptor::parse("rules:and,not"), 2);
  EXPECT_FALSE(r.program);
  EXPECT_GT(r.distinct_rules, 0u);
}

TEST(Expressibility, ImplicationsExpressDisjunction) {
  const auto r = expressibility_search(prog("p | q."), FragmentDescriptor::parse("and,imp"), 3);
  ASSERT_TRUE(r.program);
  EXPECT_TRUE(g3_equivalent(*r.program, prog("p | q.")));
  EXPECT_TRUE(fragment_check(*r.program, FragmentDescriptor::parse("and,imp")));
}

TEST(Expressibility, FoundProgramsAreEquivalent) {
  for (const char* text : {"not not p -> p.", "p -> q. q -> p.", "not p -> q. not q -> p."}) {
    const auto r = expressibility_search(prog(text), FragmentDescriptor::normal(), 1);
    if (r.program) {
      EXPECT_TRUE(g3_equivalent(*r.program, prog(text))) << text;
      EXPECT_TRUE(fragment_check(*r.program, FragmentDescriptor::normal())) << text;
    }
  }
  EXPECT_TRUE(expressibility_search(prog("not p -> q. not q -> p."), FragmentDescriptor::normal(), 1).program);
}

TEST(Expressibility, Guard) {
  EXPECT_THROW(expressibility_search(prog("p."), FragmentDescriptor::normal(), 4), GuardExceeded);
}
