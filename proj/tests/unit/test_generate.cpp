#include <gtest/gtest.h>

#include <hteq/generate.hpp>
#include <hteq/parser.hpp>

using namespace hteq;

TEST(Generator, Deterministic) {
  const ConnectiveSet allowed{Connective::conjunction, Connective::negation, Connective::implication};
  Generator a(5);
  Generator b(5);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.formula(Generator::atoms(3), allowed, 4), b.formula(Generator::atoms(3), allowed, 4));
  }
  // Pinned so that a change of sequence is noticed.
  Generator c(1729);
  std::vector<std::size_t> first;
  for (int i = 0; i < 5; ++i) first.push_back(c.below(1000));
  Generator d(1729);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(d.below(1000), first[i]);
}

TEST(Generator, RespectsShape) {
  const ConnectiveSet allowed{Connective::conjunction, Connective::negation};
  Generator gen(6);
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen.formula(Generator::atoms(2), allowed, 3);
    EXPECT_LE(f.depth(), 3u);
    EXPECT_TRUE(f.connectives().subset_of(ConnectiveSet{Connective::atom, Connective::conjunction,
                                                        Connective::negation}));
    const Program p = gen.rule_program(Generator::atoms(3), allowed, 4, 2);
    EXPECT_GE(p.size(), 1u);
    EXPECT_LE(p.size(), 4u);
    EXPECT_TRUE(fragment_check(p, FragmentDescriptor::rules(allowed))) << render(p);
    EXPECT_TRUE(fragment_check(gen.horn_program(Generator::atoms(4), 5, 2), fragments::horn_rules()));
  }
}

TEST(Generator, AtomNames) {
  EXPECT_EQ(Generator::atoms(3), make_atoms({"p", "q", "r"}));
  EXPECT_EQ(Generator::atoms(0), AtomSet{});
}

TEST(Enumerate, CountsAgree) {
  const ConnectiveSet allowed{Connective::conjunction, Connective::implication, Connective::negation};
  // Depth 0: 2 atoms. Depth <= 1: 2 + 2 + 2*2*2 = 12. Depth <= 2: 2 + 12 + 2*12*12 = 302.
  EXPECT_EQ(count_formulas(2, allowed, 0), 2u);
  EXPECT_EQ(count_formulas(2, allowed, 1), 12u);
  EXPECT_EQ(count_formulas(2, allowed, 2), 302u);
  EXPECT_EQ(count_formulas(2, allowed, 3), 182712u);
  const auto fs = enumerate_formulas(Generator::atoms(2), allowed, 2);
  EXPECT_EQ(fs.size(), 302u);
  EXPECT_EQ(std::set<Formula>(fs.begin(), fs.end()).size(), fs.size());
  for (std::size_t i = 1; i < fs.size(); ++i) EXPECT_LE(fs[i - 1].depth(), fs[i].depth());
}
